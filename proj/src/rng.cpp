#include "dcf/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcf {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> philox_round(std::array<std::uint32_t, 4> c,
                                                 std::uint32_t k0,
                                                 std::uint32_t k1) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
  const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const auto lo0 = static_cast<std::uint32_t>(p0);
  const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const auto lo1 = static_cast<std::uint32_t>(p1);
  return {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
}

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int r = 0; r < 10; ++r) {
    ctr = philox_round(ctr, key[0], key[1]);
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

// PRF for seed-tree derivation; the xor tweak keeps the derivation domain
// apart from the stream-output domain of the same master key.
constexpr std::uint64_t kChildKeyTweak = 0xA5B35705B3C5D2F1ull;

}  // namespace

SeedSpec SeedSpec::child(std::uint64_t k) const {
  const std::uint64_t tweaked = master_seed ^ kChildKeyTweak;
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(tweaked),
      static_cast<std::uint32_t>(tweaked >> 32)};
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(stream_id),
      static_cast<std::uint32_t>(stream_id >> 32), 0u, 0u};
  const auto out = philox4x32_10(ctr, key);
  const std::uint64_t derived =
      (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
  return SeedSpec{derived, k};
}

RandomStream::RandomStream(SeedSpec seed)
    : seed_(seed),
      key_{static_cast<std::uint32_t>(seed.master_seed),
           static_cast<std::uint32_t>(seed.master_seed >> 32)} {}

void RandomStream::refill() {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(pos_), static_cast<std::uint32_t>(pos_ >> 32),
      static_cast<std::uint32_t>(seed_.stream_id),
      static_cast<std::uint32_t>(seed_.stream_id >> 32)};
  block_ = philox4x32_10(ctr, key_);
  ++pos_;
  idx_ = 0;
}

std::uint32_t RandomStream::next_u32() {
  if (idx_ == 4) refill();
  return block_[idx_++];
}

std::uint64_t RandomStream::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double RandomStream::next_uniform01() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::next_uniform(double lo, double hi) {
  return lo + (hi - lo) * next_uniform01();
}

double RandomStream::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform01();
  const double u2 = next_uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

double RandomStream::next_centered_gamma() {
  // Gamma(16, 1/4) is exactly the sum of 16 Exp(1/4) variables.
  double acc = 0.0;
  for (int i = 0; i < 16; ++i) acc -= std::log(next_uniform01());
  return 0.25 * acc - 4.0;
}

double RandomStream::next_scaled_t() {
  const double z = next_normal();
  double chisq = 0.0;
  for (int i = 0; i < 5; ++i) {
    const double w = next_normal();
    chisq += w * w;
  }
  return std::sqrt(3.0 / 5.0) * z / std::sqrt(chisq / 5.0);
}

double RandomStream::next_centered_chisq() {
  const double e = -std::log(next_uniform01()) - std::log(next_uniform01());
  return (2.0 * e - 4.0) / std::sqrt(8.0);
}

RandomStream derive_stream(SeedSpec seed) { return RandomStream(seed); }

namespace {

template <typename Fn>
std::vector<double> sample_impl(std::size_t count, Fn&& draw) {
  std::vector<double> out(count);
  for (auto& v : out) v = draw();
  return out;
}

}  // namespace

std::vector<double> sample_std_normal(RandomStream& s, std::size_t count) {
  return sample_impl(count, [&] { return s.next_normal(); });
}

std::vector<double> sample_centered_gamma(RandomStream& s, std::size_t count) {
  return sample_impl(count, [&] { return s.next_centered_gamma(); });
}

std::vector<double> sample_scaled_t(RandomStream& s, std::size_t count) {
  return sample_impl(count, [&] { return s.next_scaled_t(); });
}

std::vector<double> sample_centered_chisq(RandomStream& s, std::size_t count) {
  return sample_impl(count, [&] { return s.next_centered_chisq(); });
}

std::vector<double> sample_uniform(RandomStream& s, std::size_t count,
                                   double lo, double hi) {
  if (!(lo < hi)) throw std::invalid_argument("sample_uniform: lo must be < hi");
  return sample_impl(count, [&] { return s.next_uniform(lo, hi); });
}

double draw_innovation(RandomStream& s, Innovation kind) {
  switch (kind) {
    case Innovation::StdNormal: return s.next_normal();
    case Innovation::CenteredGamma: return s.next_centered_gamma();
    case Innovation::ScaledT: return s.next_scaled_t();
    case Innovation::CenteredChiSq: return s.next_centered_chisq();
  }
  throw std::logic_error("draw_innovation: unknown kind");
}

}  // namespace dcf

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace dcf {

/// Identifies one reproducible random stream. Distinct (master_seed,
/// stream_id) pairs yield independent streams, and a stream's content
/// depends on nothing but the pair, so parallel tasks that derive their
/// own streams produce identical results for any thread count.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  /// Derive a child seed space: one PRF application to (master_seed,
  /// stream_id) gives a fresh master key, paired with stream `k`.
  /// Used to build the master -> cell -> run -> replicate seed tree.
  SeedSpec child(std::uint64_t k) const;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

/// Counter-based generator, Philox4x32-10. The key is the master seed and
/// the 128-bit counter holds (block position, stream_id), so a stream is
/// constructed in O(1) from its SeedSpec with no shared state and distinct
/// stream ids can never overlap counters.
class RandomStream {
 public:
  explicit RandomStream(SeedSpec seed);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on (0, 1]; 53 random bits, never exactly 0.
  double next_uniform01();
  double next_uniform(double lo, double hi);
  /// Standard normal via Box-Muller; the second value of each pair is
  /// cached, so consuming k draws always yields the same prefix.
  double next_normal();
  /// Gamma(16, 1/4) - 4: sum of 16 unit exponentials scaled by 1/4.
  double next_centered_gamma();
  /// (5/3)^{-1/2} t(5): normal over the root of a chi-square(5)/5,
  /// the chi-square built from five squared normals.
  double next_scaled_t();
  /// 8^{-1/2} (chi2(4) - 4): chi-square(4) as twice the sum of two
  /// unit exponentials.
  double next_centered_chisq();

  SeedSpec seed() const { return seed_; }

 private:
  void refill();

  SeedSpec seed_;
  std::array<std::uint32_t, 2> key_;
  std::uint64_t pos_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int idx_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

RandomStream derive_stream(SeedSpec seed);

std::vector<double> sample_std_normal(RandomStream& s, std::size_t count);
std::vector<double> sample_centered_gamma(RandomStream& s, std::size_t count);
std::vector<double> sample_scaled_t(RandomStream& s, std::size_t count);
std::vector<double> sample_centered_chisq(RandomStream& s, std::size_t count);
/// Uniform draws on [lo, hi]; throws std::invalid_argument if lo >= hi.
std::vector<double> sample_uniform(RandomStream& s, std::size_t count,
                                   double lo, double hi);

/// The mean-zero unit-variance innovation laws used by the simulation
/// settings.
enum class Innovation { StdNormal, CenteredGamma, ScaledT, CenteredChiSq };

double draw_innovation(RandomStream& s, Innovation kind);

}  // namespace dcf

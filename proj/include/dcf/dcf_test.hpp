#pragma once

#include <vector>

#include "dcf/rng.hpp"
#include "dcf/sample.hpp"

namespace dcf {

struct TestConfig {
  double alpha = 0.05;
  int n_boot = 2000;
  SeedSpec seed{};

  void validate() const;
};

/// The realized multiplier max-statistics, sorted ascending. Basis for the
/// critical value and the p-value.
struct BootstrapDraws {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  /// True when every draw is zero (all-constant data).
  bool degenerate() const { return values.empty() || values.back() == 0.0; }
};

struct TestResult {
  double statistic = 0.0;
  double critical_value = 0.0;
  double p_value = 1.0;
  bool reject = false;
  bool degenerate = false;
};

/// Axis-aligned confidence box for the mean difference:
/// { d : || center - d ||_inf <= half_width }.
struct ConfidenceBox {
  Eigen::VectorXd center;
  double half_width = 0.0;
};

/// Empirical proxies for the moment conditions behind the test's
/// guarantees. Sample means stand in for the unknown population means, so
/// these diagnose rather than certify.
struct Diagnostics {
  double min_combined_variance = 0.0;
  double max_avg_abs_moment_3 = 0.0;
  double max_avg_moment_4 = 0.0;
};

/// sqrt(n) * max_j | mean(X)_j - mean(Y)_j |.
double test_statistic(const Sample& x, const Sample& y);

/// N realizations of the multiplier max-statistic with the data held
/// fixed. Replicate r draws its n+m standard-normal multipliers from a
/// stream derived from (cfg.seed, r), so the result is independent of the
/// execution order and of `threads`.
BootstrapDraws bootstrap_draws(const Sample& x, const Sample& y,
                               const TestConfig& cfg, int threads = 1);

/// Smallest draw t with (# draws <= t)/N >= 1 - alpha: the order
/// statistic of rank ceil(N (1 - alpha)).
double critical_value(const BootstrapDraws& draws, double alpha);

/// (# draws >= statistic) / N.
double p_value(const BootstrapDraws& draws, double statistic);

TestResult run_test(const Sample& x, const Sample& y, const TestConfig& cfg,
                    int threads = 1);

ConfidenceBox confidence_region(const Sample& x, const Sample& y,
                                const TestConfig& cfg, int threads = 1);

/// Bootstrap power approximation at mean difference `delta`: the fraction
/// of fresh-multiplier replicates whose shifted max-statistic reaches the
/// critical value computed from cfg.seed. Star replicates draw from odd
/// stream ids and critical-value replicates from even ones, so the two
/// multiplier sets are disjoint even if star_seed == cfg.seed.
double power_estimate(const Sample& x, const Sample& y,
                      const Eigen::VectorXd& delta, const TestConfig& cfg,
                      int n_boot_star, SeedSpec star_seed, int threads = 1);

/// Same, reusing an already computed critical value.
double power_estimate_at(const Sample& x, const Sample& y,
                         const Eigen::VectorXd& delta, double crit,
                         int n_boot_star, SeedSpec star_seed,
                         int threads = 1);

Diagnostics diagnostics(const Sample& x, const Sample& y);

}  // namespace dcf

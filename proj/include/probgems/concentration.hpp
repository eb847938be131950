#pragma once

// Bernstein's inequality for sums of independent zero-mean variables:
//   P(|S_n| > t) < 2 exp(-t^2 / (2 B^2 + 2 c t)),  B^2 = Var S_n,
// valid when E|X_j|^k <= k! (sigma_j^2 / 2) c^(k-2) for all k > 2.
// Callers must center their variables; nothing here subtracts a mean.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace probgems {

struct BernsteinInput {
  double variance_sum = 1.0;  // B_n^2
  double c = 1.0;
  double t = 0.0;

  /// Uniformly bounded variables |X_j| <= M take c = M/3.
  static BernsteinInput bounded(double variance_sum, double bound_m, double t);
  static BernsteinInput make(double variance_sum, double c, double t);
};

double bernstein_bound(const BernsteinInput& input);

/// k-th absolute moment of variable j.
using MomentFn = std::function<double(std::size_t j, int k)>;

struct MomentCheckEntry {
  std::size_t variable = 0;
  int k = 0;
  double moment = 0.0;
  double allowance = 0.0;  // k! sigma^2/2 c^(k-2)
  bool holds = false;
};

struct MomentCheckReport {
  std::vector<MomentCheckEntry> entries;
  bool all_hold = true;
  /// First failing (variable, k), if any.
  std::optional<MomentCheckEntry> first_failure;
};

/// Checks the moment condition for k = 3..k_max. Exceptions thrown by
/// moment_fn are rethrown as NumericError naming the variable and k.
MomentCheckReport moment_condition_check(const std::vector<double>& sigma_sq, double c,
                                         const MomentFn& moment_fn, int k_max);

/// E|X|^k for X ~ uniform(-m, m): m^k / (k + 1).
double uniform_abs_moment(double m, int k);

struct MonteCarloTail {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::int64_t samples = 0;
};

/// Estimates P(|X_1 + ... + X_n| > t) for i.i.d. uniform(-m, m) terms.
/// Samples are split into `partitions` blocks, each driven by a generator
/// seeded deterministically from `seed` and the block index, so the result
/// does not depend on how blocks are scheduled.
MonteCarloTail simulate_uniform_sum_tail(std::int64_t n, double m, double t, std::int64_t samples,
                                         std::uint64_t seed, int partitions = 8);

/// Same as above for several thresholds at once from one set of sums.
std::vector<MonteCarloTail> simulate_uniform_sum_tails(std::int64_t n, double m, const std::vector<double>& ts,
                                                       std::int64_t samples, std::uint64_t seed,
                                                       int partitions = 8);

}  // namespace probgems

#pragma once

// Sample-size bounds for the law of large numbers: the block/geometric-series
// argument for Bernoulli trials, and the all-subsequent-trials bound.

#include <cstdint>

#include "probgems/exact.hpp"

namespace probgems {

struct LlnQuery {
  ExactNumber p;    // success probability, (0, 1)
  ExactNumber eps;  // accuracy, (0, 1)
  ExactNumber eta;  // confidence slack, (0, 1)

  /// Validates ranges and p + eps <= 1.
  static LlnQuery make(ExactNumber p, ExactNumber eps, ExactNumber eta);
};

/// Least alpha >= 1 with (p / (p + eps))^alpha <= eta, decided in exact
/// rational arithmetic.
std::int64_t bernoulli_alpha(const LlnQuery& query);

/// N = ceil((alpha (1 + eps) - q) / (eps (p + eps))), at least 1. For every
/// n >= N, P(m >= ceil(n p + n eps)) < eta.
std::int64_t bernoulli_n_bound(const LlnQuery& query);

struct TwoSidedBound {
  std::int64_t n = 0;
  /// The two-sided deviation event is certified at this level (2 * eta).
  Rational certified_level;
};

/// Applies the one-sided bound to both tails (the lower tail as the upper tail
/// of the complementary coin) and reports the union level 2 * eta. Requires
/// p + eps <= 1 and q + eps <= 1.
TwoSidedBound bernoulli_two_sided(const LlnQuery& query);

/// Smallest integer N > (2 / eps^2) ln(4 / (eps^2 eta)) + 2.
std::int64_t cantelli_n(double eps, double eta);

/// Smallest n with p q / (n eps^2) <= eta (single-trial Chebyshev).
std::int64_t chebyshev_n(double p, double eps, double eta);

}  // namespace probgems

#pragma once

// Probability y_n of at least one run of r consecutive successes in n
// Bernoulli(p) trials, by four independent routes.

#include <cstdint>
#include <vector>

#include "probgems/exact.hpp"

namespace probgems {

struct RunSpec {
  std::int64_t n = 1;
  std::int64_t r = 1;
  ExactNumber p;

  /// Checks 1 <= r <= n and 0 < p < 1.
  static RunSpec make(std::int64_t n, std::int64_t r, ExactNumber p);
};

/// Forward iteration of z_{m+1} = z_m - q p^r z_{m-r} from z_0..z_{r-1} = 1,
/// z_r = 1 - p^r; returns 1 - z_n.
double run_prob_recursive(const RunSpec& spec);

/// 1 - z_n with z_n = beta(n) - p^r beta(n-r) and
/// beta(m) = sum_k (-1)^k C(m - k r, k) (q p^r)^k.
/// Long double when every term is below e^8, exact integer arithmetic otherwise.
double run_prob_beta(const RunSpec& spec);

/// Sum of the first n-r+1 terms a_j q^j, where a_j are the power-series
/// coefficients (in x) of p^r / (1 - x - c x^2 - ... - c^{r-1} x^r), c = p/q.
/// Exact rational series division for n <= 200, long double beyond.
double run_prob_demoivre(const RunSpec& spec);

/// Dynamic program over the length of the trailing success run.
double run_prob_oracle(const RunSpec& spec);
Rational run_prob_oracle_exact(const RunSpec& spec);

/// First `count` coefficients z_0, z_1, ... of
/// (1 - p^r x^r) / (1 - x + q p^r x^{r+1}) by polynomial long division.
std::vector<double> run_generating_coefficients(std::int64_t r, double p, std::size_t count);

}  // namespace probgems

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "probgems/exact.hpp"

namespace probgems {

/// Natural log of a probability. Holds a value in [-inf, 0].
struct LogProb {
  double value = -std::numeric_limits<double>::infinity();

  double prob() const;
};

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// log Gamma(x) for x > 0. The argument is shifted above 15 and the Stirling
/// series is summed through the B_16 term:
///   1/12, -1/360, 1/1260, -1/1680, 1/1188, -691/360360, 1/156, -3617/122400.
double log_gamma(double x);

/// log(n!) - [(n + 1/2) log n - n + log sqrt(2 pi)], the Stirling remainder.
double stirling_error(double n);

/// x log(x / np) + np - x, computed without cancellation near x = np.
double deviance_term(double x, double np);

/// ln[C(n,k) p^k (1-p)^(n-k)] via the saddle-point (Loader) decomposition.
LogProb log_binom_pmf(std::int64_t n, std::int64_t k, double p);

struct ExactTail {
  double probability = 0.0;
  /// Set when l > n: the threshold lies past the support and 0 is returned by convention.
  bool threshold_clamped = false;
};

/// P(S_n > l) by direct summation of the pmf, smallest terms first with
/// compensation. l < 0 gives 1.
ExactTail binom_tail_exact(std::int64_t n, std::int64_t l, double p);

namespace exact {

/// C(n,k) p^k (1-p)^(n-k) as a rational.
Rational binom_pmf(unsigned n, unsigned k, const Rational& p);

/// P(S_n > l) as a rational; intended for n up to a few hundred.
Rational binom_tail(unsigned n, long l, const Rational& p);

}  // namespace exact

}  // namespace probgems

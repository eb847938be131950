#include "probgems/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "probgems/errors.hpp"

namespace probgems {

namespace {

constexpr double kLnSqrt2Pi = 0.918938533204672741780329736406;
constexpr double kLn2Pi = 1.837877066409345483560659472811;

// Stirling remainders for n = 0..15, evaluated once in long double from the
// exact log-factorials.
const std::array<double, 16>& small_stirling_errors() {
  static const std::array<double, 16> table = [] {
    std::array<double, 16> t{};
    long double log_fact = 0.0L;
    t[0] = 0.0;
    for (int n = 1; n < 16; ++n) {
      log_fact += std::log(static_cast<long double>(n));
      const long double ln = static_cast<long double>(n);
      t[n] = static_cast<double>(log_fact - ((ln + 0.5L) * std::log(ln) - ln +
                                             0.918938533204672741780329736406L));
    }
    return t;
  }();
  return table;
}

}  // namespace

double LogProb::prob() const { return std::exp(value); }

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  if (std::isinf(x)) return x;
  // Shift up to x >= 15 so the asymptotic series is accurate to ~1e-17.
  double shift_log = 0.0;
  double prod = 1.0;
  while (x < 15.0) {
    prod *= x;
    if (prod > 1e280) {
      shift_log += std::log(prod);
      prod = 1.0;
    }
    x += 1.0;
  }
  shift_log += std::log(prod);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12 +
             inv2 * (-1.0 / 360 +
                     inv2 * (1.0 / 1260 +
                             inv2 * (-1.0 / 1680 +
                                     inv2 * (1.0 / 1188 +
                                             inv2 * (-691.0 / 360360 +
                                                     inv2 * (1.0 / 156 + inv2 * (-3617.0 / 122400))))))));
  return (x - 0.5) * std::log(x) - x + kLnSqrt2Pi + series - shift_log;
}

double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12, s1 = 1.0 / 360, s2 = 1.0 / 1260, s3 = 1.0 / 1680, s4 = 1.0 / 1188;
  if (n < 16.0 && n == std::floor(n) && n >= 0.0) return small_stirling_errors()[static_cast<int>(n)];
  if (n < 16.0) return log_gamma(n + 1.0) - ((n + 0.5) * std::log(n) - n + kLnSqrt2Pi);
  const double nn = n * n;
  if (n > 500) return (s0 - s1 / nn) / n;
  if (n > 80) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

double deviance_term(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

LogProb log_binom_pmf(std::int64_t n, std::int64_t k, double p) {
  if (n < 0) throw DomainError("log_binom_pmf: n must be non-negative");
  if (k < 0 || k > n) throw DomainError("log_binom_pmf: k outside [0, n]");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("log_binom_pmf: p must lie in (0, 1)");
  const double q = 1.0 - p;
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  if (k == 0) return {dn * std::log1p(-p)};
  if (k == n) return {dn * std::log(p)};
  const double rest = dn - dk;
  const double lc = stirling_error(dn) - stirling_error(dk) - stirling_error(rest) -
                    deviance_term(dk, dn * p) - deviance_term(rest, dn * q);
  const double lf = kLn2Pi + std::log(dk) + std::log1p(-dk / dn);
  return {std::min(0.0, lc - 0.5 * lf)};
}

ExactTail binom_tail_exact(std::int64_t n, std::int64_t l, double p) {
  if (n < 0) throw DomainError("binom_tail_exact: n must be non-negative");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("binom_tail_exact: p must lie in (0, 1)");
  if (l < 0) return {1.0, false};
  if (l >= n) return {0.0, l > n};

  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(n - l));
  for (std::int64_t k = l + 1; k <= n; ++k) logs.push_back(log_binom_pmf(n, k, p).value);
  const double top = *std::max_element(logs.begin(), logs.end());
  std::vector<double> terms;
  terms.reserve(logs.size());
  for (double lv : logs) {
    if (lv - top > -760.0) terms.push_back(std::exp(lv - top));
  }
  std::sort(terms.begin(), terms.end());
  CompensatedSum acc;
  for (double t : terms) acc.add(t);
  const double result = std::exp(top + std::log(acc.value()));
  return {std::min(1.0, result), false};
}

namespace exact {

Rational binom_pmf(unsigned n, unsigned k, const Rational& p) {
  if (k > n) return Rational(0);
  const Rational q = Rational(1) - p;
  return Rational(binomial_big(n, k)) * pow_rational(p, k) * pow_rational(q, n - k);
}

Rational binom_tail(unsigned n, long l, const Rational& p) {
  if (l < 0) return Rational(1);
  Rational total(0);
  for (long k = l + 1; k <= static_cast<long>(n); ++k) total += binom_pmf(n, static_cast<unsigned>(k), p);
  return total;
}

}  // namespace exact

}  // namespace probgems

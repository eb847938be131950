#include "probgems/binom_tail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "probgems/errors.hpp"

namespace probgems {

TailQuery TailQuery::make(std::int64_t n, std::int64_t l, double p) {
  if (n < 1) throw DomainError("tail query: n must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("tail query: p must lie in (0, 1)");
  if (l < 0 || l >= n) throw DomainError("tail query: l must satisfy 0 <= l < n");
  if (!(static_cast<double>(l) > static_cast<double>(n) * p))
    throw MethodInapplicable("tail query: continued-fraction method needs l > n*p (got l=" +
                             std::to_string(l) + ", n*p=" + std::to_string(n * p) +
                             "); use the left-tail complement or the exact oracle");
  return {n, l, p};
}

CfCoefficients cf_coefficients(const TailQuery& query, std::int64_t k) {
  const std::int64_t n = query.n, l = query.l;
  if (k < 1 || k > n - l) throw DomainError("cf_coefficients: k outside [1, n-l]");
  const double ratio = query.p / query.q();
  const double dk = static_cast<double>(k), dn = static_cast<double>(n), dl = static_cast<double>(l);
  const double c = (static_cast<double>(n - k - l) * (dl + dk)) / ((dl + 2 * dk - 1) * (dl + 2 * dk)) * ratio;
  const double d = (dk * (dn + dk)) / ((dl + 2 * dk) * (dl + 2 * dk + 1)) * ratio;
  return {k, c, d};
}

void ConvergentState::advance(const CfCoefficients& coeffs) {
  if (m_ != 2 * coeffs.k - 1) throw DomainError("ConvergentState::advance: coefficient index out of step");
  // Even step: X_{2k} = X_{2k-1} - c_k X_{2k-2}.
  const double a_even = a_ - coeffs.c * a_prev_;
  const double b_even = b_ - coeffs.c * b_prev_;
  // Odd step: X_{2k+1} = X_{2k} + d_k X_{2k-1}.
  const double a_odd = a_even + coeffs.d * a_;
  const double b_odd = b_even + coeffs.d * b_;
  a_prev_ = a_even;
  b_prev_ = b_even;
  a_ = a_odd;
  b_ = b_odd;
  m_ += 2;
  if (b_prev_ == 0.0 || b_ == 0.0)
    throw NumericError("ConvergentState::advance: zero denominator at index " + std::to_string(m_));
  const double big = std::max({std::abs(a_), std::abs(b_), std::abs(a_prev_), std::abs(b_prev_)});
  if (big > std::ldexp(1.0, kRescaleBits)) rescale(-kRescaleBits);
}

void ConvergentState::rescale(int exponent) {
  a_prev_ = std::ldexp(a_prev_, exponent);
  a_ = std::ldexp(a_, exponent);
  b_prev_ = std::ldexp(b_prev_, exponent);
  b_ = std::ldexp(b_, exponent);
  scale_ += exponent;
}

TailBracket bracket_tail(const TailQuery& query, double tol, std::optional<std::int64_t> k_max,
                         ConvergentTrace* trace) {
  if (!(tol > 0.0)) throw DomainError("bracket_tail: tol must be positive");
  // Revalidate: a hand-built TailQuery may skip make().
  TailQuery::make(query.n, query.l, query.p);

  TailBracket out;
  out.lead_term_log = log_binom_pmf(query.n, query.l + 1, query.p);
  const double lead = out.lead_term_log.value;
  const std::int64_t last = query.n - query.l - 1;

  // S >= 1 (all series terms are positive), so Q_1 = 1 is the first lower bound.
  double lo = 1.0;
  double hi = std::numeric_limits<double>::infinity();
  if (last == 0) {
    hi = 1.0;
    out.terminal = true;
    out.converged = true;
  }

  ConvergentState state;
  for (std::int64_t k = 1; k <= last; ++k) {
    if (k_max && k > *k_max) break;
    state.advance(cf_coefficients(query, k));
    const double c_k = state.previous_ratio();
    const double d_k = state.ratio();
    if (trace) {
      trace->c_values.push_back(c_k);
      trace->d_values.push_back(d_k);
    }
    out.k_used = k;
    if (k == last) {
      lo = hi = d_k;
      out.terminal = true;
      out.converged = true;
      break;
    }
    if (k % 2 == 1)
      hi = std::min({hi, c_k, d_k});
    else
      lo = std::max({lo, c_k, d_k});
    if (std::isfinite(hi) && hi - lo <= tol * hi) {
      out.converged = true;
      break;
    }
  }

  out.lower = std::min(1.0, std::exp(lead + std::log(lo)));
  out.upper = std::isfinite(hi) ? std::min(1.0, std::exp(lead + std::log(hi))) : 1.0;
  return out;
}

TailBracket bracket_left_tail(std::int64_t n, std::int64_t j, double p, double tol,
                              std::optional<std::int64_t> k_max) {
  // S_n < j  <=>  n - S_n > n - j, and n - S_n counts failures.
  return bracket_tail(TailQuery::make(n, n - j, 1.0 - p), tol, k_max);
}

double bahadur_tail(std::int64_t n, std::int64_t j, double p, std::int64_t max_terms) {
  if (n < 1) throw DomainError("bahadur_tail: n must be positive");
  if (j < 1 || j > n) throw DomainError("bahadur_tail: j must lie in [1, n]");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("bahadur_tail: p must lie in (0, 1)");
  const double q = 1.0 - p;

  // F(n+1, 1; j+1; p) = sum_k t_k with t_0 = 1, t_{k+1} / t_k = (n+1+k) p / (j+1+k).
  // Terms rise while that ratio exceeds 1, then fall geometrically; both the
  // running sum and the current term are kept scaled by 2^scale.
  constexpr int kChunk = 600;
  CompensatedSum sum;
  double term = 1.0;
  std::int64_t scale = 0;
  sum.add(term);
  const double dn = static_cast<double>(n), dj = static_cast<double>(j);
  std::int64_t k = 0;
  for (;; ++k) {
    if (k >= max_terms)
      throw NotConverged("bahadur_tail: series did not settle within " + std::to_string(max_terms) + " terms");
    const double dk = static_cast<double>(k);
    const double r = (dn + 1.0 + dk) * p / (dj + 1.0 + dk);
    term *= r;
    sum.add(term);
    if (r < 1.0 && term < 1e-17 * sum.value()) break;
    if (sum.value() > std::ldexp(1.0, kChunk)) {
      CompensatedSum rescaled;
      rescaled.add(std::ldexp(sum.value(), -kChunk));
      sum = rescaled;
      term = std::ldexp(term, -kChunk);
      scale += kChunk;
    }
  }
  const double log_f = std::log(sum.value()) + static_cast<double>(scale) * std::log(2.0);
  const double log_lead = log_binom_pmf(n, j, p).value;
  return std::min(1.0, std::exp(log_lead + std::log(q) + log_f));
}

}  // namespace probgems

#include "probgems/runs.hpp"

#include <cmath>

#include "probgems/errors.hpp"
#include "probgems/numerics.hpp"

namespace probgems {

RunSpec RunSpec::make(std::int64_t n, std::int64_t r, ExactNumber p) {
  if (n < 1) throw DomainError("runs: n must be positive");
  if (r < 1 || r > n) throw DomainError("runs: r must satisfy 1 <= r <= n");
  if (!(p.exact() > 0 && p.exact() < 1)) throw DomainError("runs: p must lie in (0, 1)");
  return {n, r, std::move(p)};
}

double run_prob_recursive(const RunSpec& spec) {
  const double p = spec.p.value(), q = 1.0 - p;
  const auto n = static_cast<std::size_t>(spec.n), r = static_cast<std::size_t>(spec.r);
  const double pr = std::pow(p, static_cast<double>(r));
  const double step = q * pr;
  std::vector<double> z(n + 1, 1.0);
  z[r] = 1.0 - pr;
  for (std::size_t m = r; m < n; ++m) z[m + 1] = z[m] - step * z[m - r];
  return 1.0 - z[n];
}

namespace {

// sum_k (-1)^k C(m - k r, k) (a/b)^k, evaluated as an integer Horner scheme over b^K.
Rational beta_exact(std::int64_t m, std::int64_t r, const BigInt& a, const BigInt& b) {
  if (m < 0) return Rational(0);
  const std::int64_t top_k = m / (r + 1);
  BigInt acc = 0, b_power = 1;
  for (std::int64_t k = top_k; k >= 0; --k) {
    BigInt term = binomial_big(static_cast<unsigned>(m - k * r), static_cast<unsigned>(k)) * b_power;
    if (k % 2 == 1) term = -term;
    acc = term + a * acc;
    b_power *= b;
  }
  return Rational(acc, b_power / b);
}

long double log_binom_ld(long double top, long double k) {
  return std::lgamma(top + 1) - std::lgamma(k + 1) - std::lgamma(top - k + 1);
}

// log of the largest |term| of the alternating beta sum.
long double beta_log_max_term(std::int64_t m, std::int64_t r, long double log_x) {
  long double best = 0.0L;
  for (std::int64_t k = 0; m - k * r >= k; ++k)
    best = std::max(best, log_binom_ld(static_cast<long double>(m - k * r), static_cast<long double>(k)) +
                              static_cast<long double>(k) * log_x);
  return best;
}

long double beta_float(std::int64_t m, std::int64_t r, long double x) {
  if (m < 0) return 0.0L;
  long double total = 0.0L, comp = 0.0L;
  const long double log_x = std::log(x);
  for (std::int64_t k = 0; m - k * r >= k; ++k) {
    long double term = std::exp(log_binom_ld(static_cast<long double>(m - k * r), static_cast<long double>(k)) +
                                static_cast<long double>(k) * log_x);
    if (k % 2 == 1) term = -term;
    const long double t = total + term;
    comp += std::abs(total) >= std::abs(term) ? (total - t) + term : (term - t) + total;
    total = t;
  }
  return total + comp;
}

template <typename Num>
Num demoivre_sum(std::int64_t n, std::int64_t r, const Num& p) {
  const Num q = Num(1) - p;
  const Num c = p / q;
  const auto terms = static_cast<std::size_t>(n - r + 1);
  // Divisor coefficients: 1, -1, -c, -c^2, ..., -c^{r-1} (degrees 0..r).
  std::vector<Num> divisor(static_cast<std::size_t>(r) + 1);
  divisor[0] = Num(1);
  Num cp(1);
  for (std::int64_t i = 1; i <= r; ++i) {
    divisor[static_cast<std::size_t>(i)] = -cp;
    cp *= c;
  }
  Num pr(1);
  for (std::int64_t i = 0; i < r; ++i) pr *= p;
  std::vector<Num> a(terms);
  Num total(0);
  Num q_power(1);
  for (std::size_t j = 0; j < terms; ++j) {
    Num coeff = j == 0 ? pr : Num(0);
    for (std::size_t i = 1; i <= std::min<std::size_t>(j, static_cast<std::size_t>(r)); ++i)
      coeff -= divisor[i] * a[j - i];
    a[j] = coeff;
    total += coeff * q_power;
    q_power *= q;
  }
  return total;
}

}  // namespace

double run_prob_beta(const RunSpec& spec) {
  const std::int64_t n = spec.n, r = spec.r;
  const long double p = spec.p.value();
  const long double pr = std::pow(p, static_cast<long double>(r));
  const long double x = (1.0L - p) * pr;
  if (beta_log_max_term(n, r, std::log(x)) < 8.0L) {
    const long double z = beta_float(n, r, x) - pr * beta_float(n - r, r, x);
    return static_cast<double>(1.0L - z);
  }
  const Rational& pe = spec.p.exact();
  const Rational pr_exact = pow_rational(pe, static_cast<unsigned>(r));
  const Rational x_exact = (Rational(1) - pe) * pr_exact;
  const BigInt a = boost::multiprecision::numerator(x_exact), b = boost::multiprecision::denominator(x_exact);
  const Rational z = beta_exact(n, r, a, b) - pr_exact * beta_exact(n - r, r, a, b);
  return to_double(Rational(Rational(1) - z));
}

double run_prob_demoivre(const RunSpec& spec) {
  if (spec.n <= 200) return to_double(demoivre_sum<Rational>(spec.n, spec.r, spec.p.exact()));
  return static_cast<double>(demoivre_sum<long double>(spec.n, spec.r, static_cast<long double>(spec.p.value())));
}

namespace {

template <typename Num>
Num run_dp(std::int64_t n, std::int64_t r, const Num& p) {
  const Num q = Num(1) - p;
  // state[j]: no run yet, trailing successes == j (0 <= j < r).
  std::vector<Num> state(static_cast<std::size_t>(r), Num(0));
  state[0] = Num(1);
  Num absorbed(0);
  for (std::int64_t t = 0; t < n; ++t) {
    std::vector<Num> next(state.size(), Num(0));
    for (std::size_t j = 0; j < state.size(); ++j) {
      next[0] += state[j] * q;
      if (j + 1 == state.size())
        absorbed += state[j] * p;
      else
        next[j + 1] += state[j] * p;
    }
    state = std::move(next);
  }
  return absorbed;
}

}  // namespace

double run_prob_oracle(const RunSpec& spec) { return run_dp<double>(spec.n, spec.r, spec.p.value()); }

Rational run_prob_oracle_exact(const RunSpec& spec) { return run_dp<Rational>(spec.n, spec.r, spec.p.exact()); }

std::vector<double> run_generating_coefficients(std::int64_t r, double p, std::size_t count) {
  if (r < 1) throw DomainError("run_generating_coefficients: r must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("run_generating_coefficients: p must lie in (0, 1)");
  const double pr = std::pow(p, static_cast<double>(r));
  const auto ur = static_cast<std::size_t>(r);
  // numerator 1 - p^r x^r; denominator 1 - x + q p^r x^{r+1}.
  std::vector<double> num(count, 0.0);
  if (count > 0) num[0] = 1.0;
  if (ur < count) num[ur] -= pr;
  std::vector<double> den(ur + 2, 0.0);
  den[0] = 1.0;
  den[1] = -1.0;
  den[ur + 1] += (1.0 - p) * pr;
  std::vector<double> out(count, 0.0);
  for (std::size_t m = 0; m < count; ++m) {
    double v = num[m];
    for (std::size_t i = 1; i < den.size() && i <= m; ++i) v -= den[i] * out[m - i];
    out[m] = v;  // den[0] == 1
  }
  return out;
}

}  // namespace probgems

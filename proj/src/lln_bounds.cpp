#include "probgems/lln_bounds.hpp"

#include <cmath>

#include "probgems/errors.hpp"

namespace probgems {

namespace mp = boost::multiprecision;

namespace {

bool in_open_unit(const Rational& x) { return x > 0 && x < 1; }

BigInt ceil_rational(const Rational& r) {
  const BigInt num = mp::numerator(r), den = mp::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (q * den != num && r > 0) q += 1;
  return q;
}

// ratio^alpha <= eta, exactly.
bool power_at_most(const Rational& ratio, std::int64_t alpha, const Rational& eta) {
  return pow_rational(ratio, static_cast<unsigned>(alpha)) <= eta;
}

}  // namespace

LlnQuery LlnQuery::make(ExactNumber p, ExactNumber eps, ExactNumber eta) {
  if (!in_open_unit(p.exact())) throw DomainError("lln: p must lie in (0, 1)");
  if (!in_open_unit(eps.exact())) throw DomainError("lln: eps must lie in (0, 1)");
  if (!in_open_unit(eta.exact())) throw DomainError("lln: eta must lie in (0, 1)");
  if (p.exact() + eps.exact() > 1)
    throw DomainError("lln: p + eps exceeds 1, the upper deviation event is empty");
  return {std::move(p), std::move(eps), std::move(eta)};
}

std::int64_t bernoulli_alpha(const LlnQuery& query) {
  const Rational ratio = query.p.exact() / (query.p.exact() + query.eps.exact());
  const Rational& eta = query.eta.exact();
  // Floating estimate, then settle the boundary exactly.
  const double est = std::log(query.eta.value()) / std::log(to_double(ratio));
  std::int64_t alpha = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(est)));
  while (alpha > 1 && power_at_most(ratio, alpha - 1, eta)) --alpha;
  while (!power_at_most(ratio, alpha, eta)) ++alpha;
  return alpha;
}

std::int64_t bernoulli_n_bound(const LlnQuery& query) {
  const Rational& p = query.p.exact();
  const Rational& eps = query.eps.exact();
  const Rational q = Rational(1) - p;
  const Rational alpha(bernoulli_alpha(query));
  const Rational bound = (alpha * (Rational(1) + eps) - q) / (eps * (p + eps));
  const BigInt n = ceil_rational(bound);
  return std::max<std::int64_t>(1, n.convert_to<std::int64_t>());
}

TwoSidedBound bernoulli_two_sided(const LlnQuery& query) {
  const ExactNumber q(Rational(Rational(1) - query.p.exact()));
  const auto upper = bernoulli_n_bound(query);
  const auto lower = bernoulli_n_bound(LlnQuery::make(q, query.eps, query.eta));
  return {std::max(upper, lower), Rational(2 * query.eta.exact())};
}

std::int64_t cantelli_n(double eps, double eta) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("cantelli_n: eps must lie in (0, 1)");
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("cantelli_n: eta must lie in (0, 1)");
  const double bound = 2.0 / (eps * eps) * std::log(4.0 / (eps * eps * eta)) + 2.0;
  return static_cast<std::int64_t>(std::floor(bound)) + 1;
}

std::int64_t chebyshev_n(double p, double eps, double eta) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("chebyshev_n: p must lie in (0, 1)");
  const double bound = p * (1.0 - p) / (eps * eps * eta);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(bound)));
}

}  // namespace probgems

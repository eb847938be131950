#include <doctest.h>

#include <cmath>

#include "probgems/errors.hpp"
#include "probgems/lln_bounds.hpp"
#include "probgems/numerics.hpp"

using namespace probgems;

namespace {

LlnQuery query(const char* p, const char* eps, const char* eta) {
  return LlnQuery::make(ExactNumber::parse(p), ExactNumber::parse(eps), ExactNumber::parse(eta));
}

// Least alpha with (p/(p+eps))^alpha <= eta by repeated exact multiplication.
std::int64_t alpha_by_iteration(const LlnQuery& q) {
  const Rational ratio = q.p.exact() / (q.p.exact() + q.eps.exact());
  Rational power = ratio;
  std::int64_t alpha = 1;
  while (power > q.eta.exact()) {
    power *= ratio;
    ++alpha;
  }
  return alpha;
}

}  // namespace

TEST_CASE("alpha examples") {
  CHECK(bernoulli_alpha(query("0.5", "0.5", "0.5")) == 1);
  CHECK(bernoulli_alpha(query("0.5", "0.1", "0.01")) == 26);
  const auto q = query("1/3", "1/6", "0.05");
  CHECK(bernoulli_alpha(q) == alpha_by_iteration(q));
  for (const char* eta : {"0.3", "0.01", "1e-6", "1/7"}) {
    const auto g = query("0.2", "0.05", eta);
    CHECK(bernoulli_alpha(g) == alpha_by_iteration(g));
  }
}

TEST_CASE("sample size formula") {
  CHECK(bernoulli_n_bound(query("0.5", "0.5", "0.5")) == 2);
  const auto q = query("0.3", "0.1", "0.05");
  const std::int64_t n = bernoulli_n_bound(q);
  const auto mu = static_cast<std::int64_t>(std::ceil(n * 0.3 + n * 0.1 - 1e-9));
  CHECK(binom_tail_exact(n, mu - 1, 0.3).probability < 0.05);
}

TEST_CASE("sample size is monotone in eta") {
  std::int64_t previous = INT64_MAX;
  for (const char* eta : {"0.001", "0.01", "0.1", "0.5", "0.9", "0.999"}) {
    const std::int64_t n = bernoulli_n_bound(query("0.4", "0.1", eta));
    CHECK(n <= previous);
    previous = n;
  }
}

TEST_CASE("two-sided bound") {
  const auto ts = bernoulli_two_sided(query("0.3", "0.1", "0.05"));
  CHECK(ts.certified_level == Rational(1, 10));
  CHECK(ts.n >= bernoulli_n_bound(query("0.3", "0.1", "0.05")));
  CHECK(ts.n >= bernoulli_n_bound(query("0.7", "0.1", "0.05")));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(query("0", "0.1", "0.1"), DomainError);
  CHECK_THROWS_AS(query("0.5", "1", "0.1"), DomainError);
  CHECK_THROWS_AS(query("0.5", "0.1", "1"), DomainError);
  CHECK_THROWS_AS(query("0.9", "0.2", "0.1"), DomainError);
  CHECK_NOTHROW(query("0.9", "0.1", "0.1"));
}

TEST_CASE("Cantelli") {
  CHECK(cantelli_n(0.1, 0.1) == 1661);
  const double x = 8.0 * std::log(32.0) + 2.0;
  CHECK(cantelli_n(0.5, 0.5) == static_cast<std::int64_t>(std::floor(x)) + 1);
  CHECK(cantelli_n(0.1, 0.05) > cantelli_n(0.1, 0.1));
  CHECK_THROWS_AS(cantelli_n(0.0, 0.1), DomainError);
}

TEST_CASE("Chebyshev") {
  CHECK(chebyshev_n(0.5, 0.1, 0.05) == 500);
  CHECK_THROWS_AS(chebyshev_n(1.0, 0.1, 0.05), DomainError);
}

#include <doctest.h>

#include <cmath>

#include "probgems/concentration.hpp"
#include "probgems/errors.hpp"

using namespace probgems;

TEST_CASE("bound values") {
  CHECK(bernstein_bound(BernsteinInput::make(10.0, 1.0, 0.0)) == 2.0);
  double previous = 2.0;
  for (double t = 1.0; t < 200.0; t *= 1.5) {
    const double b = bernstein_bound(BernsteinInput::make(10.0, 1.0, t));
    CHECK(b < previous);
    previous = b;
  }
  CHECK(previous < 1e-10);
  const auto in = BernsteinInput::bounded(100.0 / 3.0, 1.0, 20.0);
  CHECK(in.c == doctest::Approx(1.0 / 3.0));
  CHECK(bernstein_bound(in) ==
        doctest::Approx(2.0 * std::exp(-400.0 / (200.0 / 3.0 + 40.0 / 3.0))).epsilon(1e-14));
  CHECK_THROWS_AS(BernsteinInput::make(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(BernsteinInput::make(1.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(BernsteinInput::make(1.0, 1.0, -1.0), DomainError);
}

TEST_CASE("moment condition") {
  const auto uni = moment_condition_check({1.0 / 3.0}, 1.0 / 3.0,
                                          [](std::size_t, int k) { return uniform_abs_moment(1.0, k); }, 10);
  CHECK(uni.all_hold);
  CHECK(uni.entries.size() == 8);
  CHECK(uni.entries.front().k == 3);

  // Moments growing like k^k sigma^2 outrun k! c^(k-2).
  const auto heavy = moment_condition_check(
      {1.0}, 1.0, [](std::size_t, int k) { return std::pow(static_cast<double>(k), k); }, 12);
  CHECK_FALSE(heavy.all_hold);
  REQUIRE(heavy.first_failure.has_value());
  CHECK(heavy.first_failure->k == 3);

  CHECK_THROWS_AS(moment_condition_check({1.0}, 1.0, [](std::size_t, int) { return 1.0; }, 2), DomainError);
  CHECK_THROWS_AS(moment_condition_check(
                      {1.0, 1.0}, 1.0,
                      [](std::size_t j, int k) -> double {
                        if (j == 1 && k == 5) throw std::runtime_error("boom");
                        return 0.0;
                      },
                      8),
                  NumericError);
  CHECK(uniform_abs_moment(2.0, 3) == doctest::Approx(2.0));
}

TEST_CASE("seeded Monte Carlo is reproducible and respects the bound") {
  const auto a = simulate_uniform_sum_tail(100, 1.0, 20.0, 200000, 99);
  const auto b = simulate_uniform_sum_tail(100, 1.0, 20.0, 200000, 99);
  CHECK(a.estimate == b.estimate);
  CHECK(a.samples == 200000);
  const double bound = bernstein_bound(BernsteinInput::bounded(100.0 / 3.0, 1.0, 20.0));
  CHECK(a.estimate <= bound + 3 * a.standard_error);

  const auto multi = simulate_uniform_sum_tails(10, 1.0, {0.0, 2.0, 5.0}, 100000, 5);
  REQUIRE(multi.size() == 3);
  CHECK(multi[0].estimate > multi[1].estimate);
  CHECK(multi[1].estimate > multi[2].estimate);
  const auto single = simulate_uniform_sum_tail(10, 1.0, 2.0, 100000, 5);
  CHECK(single.estimate == multi[1].estimate);
  CHECK_THROWS_AS(simulate_uniform_sum_tail(0, 1.0, 1.0, 10, 1), DomainError);
}

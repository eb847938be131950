#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace probgems {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double (every double is a dyadic rational).
Rational to_rational(double x);

/// Nearest double to a rational.
double to_double(const Rational& r);

/// Natural log of a positive big integer / rational, accurate to a few ulps
/// even when the operands have thousands of digits.
double log_big(const BigInt& x);
double log_rational(const Rational& r);

BigInt binomial_big(unsigned n, unsigned k);

Rational pow_rational(const Rational& base, unsigned exponent);

/// A real input that remembers its exact rational form. Parsed from "1/3",
/// "0.25", "-2", "1e-3"; decimals are taken as the exact decimal fraction,
/// not the nearest double.
class ExactNumber {
 public:
  ExactNumber() = default;
  explicit ExactNumber(double x) : exact_(to_rational(x)), approx_(x) {}
  explicit ExactNumber(Rational r) : exact_(std::move(r)), approx_(to_double(exact_)) {}

  static ExactNumber parse(std::string_view text);

  const Rational& exact() const { return exact_; }
  double value() const { return approx_; }

 private:
  Rational exact_{0};
  double approx_ = 0.0;
};

}  // namespace probgems

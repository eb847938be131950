#include "probgems/exact.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace probgems {

namespace mp = boost::multiprecision;

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("to_rational: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num(scaled);
  if (exp >= 0) return Rational(num << exp);
  BigInt den(1);
  den <<= -exp;
  return Rational(num, den);
}

namespace {

// x = top * 2^shift with top < 2^63.
std::pair<std::uint64_t, long> split_top(const BigInt& x) {
  const long bits = static_cast<long>(mp::msb(x)) + 1;
  const long shift = bits > 63 ? bits - 63 : 0;
  BigInt top = x >> shift;
  return {top.convert_to<std::uint64_t>(), shift};
}

}  // namespace

double to_double(const Rational& r) {
  if (r == 0) return 0.0;
  BigInt num = mp::numerator(r);
  const BigInt den = mp::denominator(r);
  const bool neg = num < 0;
  if (neg) num = -num;
  // Scale the quotient to ~64 significant bits, then let ldexp place it.
  const long shift = 64 - (static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)));
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt((num >> -shift) / den);
  auto [top, extra] = split_top(q);
  const double v = std::ldexp(static_cast<double>(top), static_cast<int>(extra - shift));
  return neg ? -v : v;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: non-positive argument");
  auto [top, shift] = split_top(x);
  return std::log(static_cast<double>(top)) + static_cast<double>(shift) * std::numbers::ln2;
}

double log_rational(const Rational& r) {
  if (r <= 0) throw std::domain_error("log_rational: non-positive argument");
  return log_big(mp::numerator(r)) - log_big(mp::denominator(r));
}

BigInt binomial_big(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt acc(1);
  for (unsigned i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;
  }
  return acc;
}

Rational pow_rational(const Rational& base, unsigned exponent) {
  return Rational(mp::pow(BigInt(mp::numerator(base)), exponent),
                  mp::pow(BigInt(mp::denominator(base)), exponent));
}

namespace {

Rational parse_decimal(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  BigInt digits(0);
  long scale = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits = digits * 10 + (s[i++] - '0');
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = digits * 10 + (s[i++] - '0');
      --scale;
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    long e = 0;
    bool edig = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      e = e * 10 + (s[i++] - '0');
      edig = true;
      if (e > 100000) throw std::invalid_argument("exponent too large: '" + std::string(s) + "'");
    }
    if (!edig) throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    scale += eneg ? -e : e;
  }
  if (i != s.size()) throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  Rational out(digits);
  if (scale > 0) out *= Rational(mp::pow(BigInt(10), static_cast<unsigned>(scale)));
  if (scale < 0) out /= Rational(mp::pow(BigInt(10), static_cast<unsigned>(-scale)));
  return neg ? Rational(-out) : out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ExactNumber ExactNumber::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactNumber(parse_decimal(text));
  const Rational num = parse_decimal(trim(text.substr(0, slash)));
  const Rational den = parse_decimal(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return ExactNumber(Rational(num / den));
}

}  // namespace probgems

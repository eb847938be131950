#include "probgems/beatty.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>

#include "probgems/errors.hpp"

namespace probgems {

using i128 = __int128;

namespace {

i128 isqrt128(i128 x) {
  if (x < 0) throw DomainError("isqrt of negative value");
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

i128 gcd128(i128 x, i128 y) {
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    const i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

i128 floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw NumericError("quadratic irrational coefficient overflow");
  return static_cast<std::int64_t>(v);
}

bool is_square(std::int64_t d) {
  if (d < 0) return false;
  const i128 r = isqrt128(d);
  return r * r == d;
}

}  // namespace

QuadraticIrrational::QuadraticIrrational(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t c)
    : a_(a), b_(b), d_(d), c_(c) {
  if (c_ == 0) throw DomainError("quadratic irrational: zero denominator");
  if (b_ != 0) {
    if (d_ < 2) throw DomainError("quadratic irrational: radicand must be at least 2");
    if (is_square(d_)) {
      a_ += b_ * narrow(isqrt128(d_));
      b_ = 0;
    }
  }
  if (b_ == 0) d_ = 0;
  normalize();
}

QuadraticIrrational QuadraticIrrational::rational(std::int64_t num, std::int64_t den) { return {num, 0, 0, den}; }

void QuadraticIrrational::normalize() {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  std::int64_t g = std::gcd(std::gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

QuadraticIrrational QuadraticIrrational::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "phi") return golden_ratio();
  static const std::regex rational_re(R"(^(-?\d+)(?:/(\d+))?$)");
  static const std::regex surd_re(
      R"(^(\()?(-?\d+)?(?:([+-])?(\d+)?\*?sqrt\((\d+)\))\)?(?:/(\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, rational_re))
    return rational(std::stoll(m[1].str()), m[2].matched ? std::stoll(m[2].str()) : 1);
  if (std::regex_match(s, m, surd_re)) {
    if (std::count(s.begin(), s.end(), '(') != std::count(s.begin(), s.end(), ')'))
      throw std::invalid_argument("unbalanced parentheses in '" + s + "'");
    std::int64_t a = 0, b = 1;
    if (m[2].matched) {
      // "2*sqrt(3)" puts the multiplier in the leading group when no sign follows.
      if (!m[3].matched && !m[4].matched)
        b = std::stoll(m[2].str());
      else
        a = std::stoll(m[2].str());
    }
    if (m[4].matched) b = std::stoll(m[4].str());
    if (m[3].matched && m[3].str() == "-") b = -b;
    const std::int64_t d = std::stoll(m[5].str());
    const std::int64_t c = m[6].matched ? std::stoll(m[6].str()) : 1;
    return {a, b, d, c};
  }
  throw std::invalid_argument("cannot parse quadratic irrational '" + std::string(text) + "'");
}

long double QuadraticIrrational::value() const {
  return (static_cast<long double>(a_) + static_cast<long double>(b_) * std::sqrt(static_cast<long double>(d_))) /
         static_cast<long double>(c_);
}

std::int64_t QuadraticIrrational::floor_multiple(std::int64_t n) const {
  const i128 na = static_cast<i128>(n) * a_;
  const i128 nb = static_cast<i128>(n) * b_;
  if (nb == 0) return narrow(floor_div(na, c_));
  // floor(nb sqrt(d)); sqrt(d) is irrational, so n*b*sqrt(d) is never an integer.
  const i128 mag = isqrt128(nb * nb * d_);
  const i128 fl = nb > 0 ? mag : -mag - 1;
  // (na + t)/c with fl < t < fl + 1 has the same floor as (na + fl)/c.
  return narrow(floor_div(na + fl, c_));
}

QuadraticIrrational QuadraticIrrational::reciprocal() const {
  // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
  const i128 den = static_cast<i128>(a_) * a_ - static_cast<i128>(b_) * b_ * d_;
  if (den == 0) throw DomainError("quadratic irrational: reciprocal of zero");
  return {narrow(static_cast<i128>(c_) * a_), narrow(-static_cast<i128>(c_) * b_), d_ == 0 ? 2 : d_, narrow(den)};
}

QuadraticIrrational QuadraticIrrational::operator+(const QuadraticIrrational& o) const {
  if (b_ != 0 && o.b_ != 0 && d_ != o.d_) throw DomainError("quadratic irrationals over different fields");
  const std::int64_t d = b_ != 0 ? d_ : (o.b_ != 0 ? o.d_ : 2);
  const i128 a = static_cast<i128>(a_) * o.c_ + static_cast<i128>(o.a_) * c_;
  const i128 b = static_cast<i128>(b_) * o.c_ + static_cast<i128>(o.b_) * c_;
  const i128 c = static_cast<i128>(c_) * o.c_;
  const i128 g = gcd128(gcd128(a, b), c);
  return {narrow(a / g), narrow(b / g), d, narrow(c / g)};
}

QuadraticIrrational QuadraticIrrational::operator-(const QuadraticIrrational& o) const {
  return *this + QuadraticIrrational(-o.a_, -o.b_, o.b_ != 0 ? o.d_ : 2, o.c_);
}

QuadraticIrrational QuadraticIrrational::complement() const {
  // 1/beta = 1 - 1/alpha
  return (rational(1, 1) - reciprocal()).reciprocal();
}

std::string QuadraticIrrational::to_string() const {
  if (b_ == 0) return c_ == 1 ? std::to_string(a_) : std::to_string(a_) + "/" + std::to_string(c_);
  const std::int64_t mag = b_ < 0 ? -b_ : b_;
  std::string root = (mag == 1 ? "" : std::to_string(mag) + "*") + "sqrt(" + std::to_string(d_) + ")";
  std::string s;
  if (a_ == 0)
    s = (b_ < 0 ? "-" : "") + root;
  else
    s = std::to_string(a_) + (b_ < 0 ? "-" : "+") + root;
  if (c_ == 1) return s;
  return (a_ == 0 && b_ > 0 ? s : "(" + s + ")") + "/" + std::to_string(c_);
}

Spectrum make_spectrum(const QuadraticIrrational& alpha, std::int64_t horizon) {
  if (!(alpha.value() > 1.0L)) throw DomainError("spectrum: alpha must exceed 1");
  Spectrum s{alpha.value(), horizon, {}, {}};
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t v = alpha.floor_multiple(n);
    if (v > horizon) break;
    s.values.push_back(v);
  }
  return s;
}

Spectrum make_spectrum(long double alpha, std::int64_t horizon) {
  if (!(alpha > 1.0L)) throw DomainError("spectrum: alpha must exceed 1");
  Spectrum s{alpha, horizon, {}, {}};
  for (std::int64_t n = 1;; ++n) {
    const long double x = static_cast<long double>(n) * alpha;
    const long double fl = std::floor(x);
    if (fl > static_cast<long double>(horizon)) break;
    const long double frac = x - fl;
    if (frac < 1e-9L || frac > 1.0L - 1e-9L) s.ambiguous.push_back(n);
    s.values.push_back(static_cast<std::int64_t>(fl));
  }
  return s;
}

namespace {

void compare_spectra(const Spectrum& first, const Spectrum& second, std::int64_t horizon, BeattyPairReport& out) {
  std::vector<std::uint8_t> hits(static_cast<std::size_t>(horizon) + 1, 0);
  for (const auto* sp : {&first, &second})
    for (auto v : sp->values)
      if (v >= 1) ++hits[static_cast<std::size_t>(v)];
  for (std::int64_t k = 1; k <= horizon; ++k) {
    const auto h = hits[static_cast<std::size_t>(k)];
    if (h > 1 && !out.first_collision) out.first_collision = k;
    if (h == 0 && !out.first_gap) out.first_gap = k;
  }
  out.disjoint = !out.first_collision.has_value();
  out.covers = !out.first_gap.has_value();
  out.inconclusive = !first.ambiguous.empty() || !second.ambiguous.empty();
}

}  // namespace

BeattyPairReport beatty_pair_check(const QuadraticIrrational& alpha, std::int64_t horizon) {
  if (horizon < 1) throw DomainError("beatty_pair_check: horizon must be positive");
  if (!(alpha.value() > 1.0L)) throw DomainError("beatty_pair_check: alpha must exceed 1");
  BeattyPairReport out;
  const QuadraticIrrational beta = alpha.complement();
  out.alpha = alpha.value();
  out.beta = beta.value();
  out.exact_beta = beta;
  compare_spectra(make_spectrum(alpha, horizon), make_spectrum(beta, horizon), horizon, out);
  return out;
}

BeattyPairReport beatty_pair_check(long double alpha, std::int64_t horizon) {
  if (horizon < 1) throw DomainError("beatty_pair_check: horizon must be positive");
  if (!(alpha > 1.0L)) throw DomainError("beatty_pair_check: alpha must exceed 1");
  BeattyPairReport out;
  out.alpha = alpha;
  out.beta = alpha / (alpha - 1.0L);
  compare_spectra(make_spectrum(alpha, horizon), make_spectrum(out.beta, horizon), horizon, out);
  return out;
}

namespace {

TripleWitness scan_triple(const std::array<Spectrum, 3>& spectra, std::int64_t horizon) {
  TripleWitness w;
  if (horizon < 1) {
    w.inconclusive = true;
    return w;
  }
  std::vector<std::uint8_t> hits(static_cast<std::size_t>(horizon) + 1, 0);
  for (const auto& sp : spectra) {
    for (auto v : sp.values)
      if (v >= 1) ++hits[static_cast<std::size_t>(v)];
  }
  for (std::int64_t k = 1; k <= horizon; ++k) {
    const auto h = hits[static_cast<std::size_t>(k)];
    if (h != 1) {
      w.value = k;
      w.kind = h == 0 ? WitnessKind::Missed : WitnessKind::DoublyCovered;
      break;
    }
  }
  const std::int64_t decided_up_to = w.value.value_or(horizon);
  bool ambiguous = false;
  for (const auto& sp : spectra)
    for (auto n : sp.ambiguous)
      ambiguous = ambiguous || std::llround(static_cast<long double>(n) * sp.alpha) - 1 <= decided_up_to;
  w.inconclusive = !w.value.has_value() || ambiguous;
  return w;
}

}  // namespace

TripleWitness triple_spectrum_search(const std::array<QuadraticIrrational, 3>& alphas, std::int64_t horizon) {
  if (horizon < 1) return {std::nullopt, WitnessKind::Missed, true};
  return scan_triple({make_spectrum(alphas[0], horizon), make_spectrum(alphas[1], horizon),
                      make_spectrum(alphas[2], horizon)},
                     horizon);
}

TripleWitness triple_spectrum_search(const std::array<long double, 3>& alphas, std::int64_t horizon) {
  if (horizon < 1) return {std::nullopt, WitnessKind::Missed, true};
  return scan_triple({make_spectrum(alphas[0], horizon), make_spectrum(alphas[1], horizon),
                      make_spectrum(alphas[2], horizon)},
                     horizon);
}

std::vector<std::pair<std::int64_t, std::int64_t>> wythoff_cold(std::int64_t count) {
  if (count < 1) throw DomainError("wythoff_cold: count must be positive");
  const auto phi = QuadraticIrrational::golden_ratio();
  const QuadraticIrrational phi_sq(3, 1, 5, 2);
  std::vector<std::pair<std::int64_t, std::int64_t>> out{{0, 0}};
  for (std::int64_t n = 1; n <= count; ++n) out.emplace_back(phi.floor_multiple(n), phi_sq.floor_multiple(n));
  return out;
}

}  // namespace probgems

#pragma once

// Beatty spectra floor(n * alpha), n = 1, 2, ...

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace probgems {

/// (a + b sqrt(d)) / c with c > 0 and d a non-square >= 2 (or b = 0 for a
/// rational). Floors of integer multiples are computed exactly.
class QuadraticIrrational {
 public:
  QuadraticIrrational(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t c);
  static QuadraticIrrational rational(std::int64_t num, std::int64_t den);
  static QuadraticIrrational golden_ratio() { return {1, 1, 5, 2}; }

  /// Accepts "phi", "p/q", "sqrt(D)", "(A+B*sqrt(D))/C" and close variants
  /// ("A-sqrt(D)", "2*sqrt(3)", "(1+sqrt(5))/2").
  static QuadraticIrrational parse(std::string_view text);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t d() const { return d_; }
  std::int64_t c() const { return c_; }
  bool is_rational() const { return b_ == 0; }

  long double value() const;
  /// floor(n * value()), exact.
  std::int64_t floor_multiple(std::int64_t n) const;

  QuadraticIrrational reciprocal() const;
  /// alpha / (alpha - 1), the partner with 1/alpha + 1/beta = 1.
  QuadraticIrrational complement() const;
  QuadraticIrrational operator-(const QuadraticIrrational& other) const;
  QuadraticIrrational operator+(const QuadraticIrrational& other) const;

  std::string to_string() const;
  bool operator==(const QuadraticIrrational&) const = default;

 private:
  void normalize();
  std::int64_t a_, b_, d_, c_;
};

struct Spectrum {
  long double alpha = 0.0L;
  std::int64_t horizon = 0;
  /// floor(n alpha) for n = 1, 2, ... while <= horizon.
  std::vector<std::int64_t> values;
  /// Indices n where n*alpha fell within 1e-9 of an integer (real input only).
  std::vector<std::int64_t> ambiguous;
};

Spectrum make_spectrum(const QuadraticIrrational& alpha, std::int64_t horizon);
Spectrum make_spectrum(long double alpha, std::int64_t horizon);

struct BeattyPairReport {
  long double alpha = 0.0L;
  long double beta = 0.0L;
  std::optional<QuadraticIrrational> exact_beta;
  bool disjoint = true;
  bool covers = true;
  std::optional<std::int64_t> first_collision;
  std::optional<std::int64_t> first_gap;
  /// Some floors could not be decided at working precision.
  bool inconclusive = false;
};

/// Spectra of alpha and alpha/(alpha-1) up to horizon: disjointness and
/// coverage of {1..horizon}. Throws DomainError for alpha <= 1.
BeattyPairReport beatty_pair_check(const QuadraticIrrational& alpha, std::int64_t horizon);
BeattyPairReport beatty_pair_check(long double alpha, std::int64_t horizon);

enum class WitnessKind { Missed, DoublyCovered };

struct TripleWitness {
  std::optional<std::int64_t> value;
  WitnessKind kind = WitnessKind::Missed;
  /// No witness at or below the horizon (or undecidable floors).
  bool inconclusive = false;
};

/// Smallest integer <= horizon missed or hit twice by the three spectra.
TripleWitness triple_spectrum_search(const std::array<QuadraticIrrational, 3>& alphas, std::int64_t horizon);
TripleWitness triple_spectrum_search(const std::array<long double, 3>& alphas, std::int64_t horizon);

/// (0, 0) followed by (floor(n phi), floor(n phi^2)) for n = 1..count.
std::vector<std::pair<std::int64_t, std::int64_t>> wythoff_cold(std::int64_t count);

}  // namespace probgems

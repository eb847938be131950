#pragma once

// Continued-fraction brackets for the right binomial tail P(S_n > l).
//
// For l > np the tail factors as b(l+1; n, p) * S, where the series factor
// S = F(-n+l+1, 1; l+2; -p/q) has the continued fraction
//
//   S = 1 / (1 - c_1 / (1 + d_1 / (1 - c_2 / (1 + d_2 / ...))))
//
//   c_k = (n-k-l)(l+k) / ((l+2k-1)(l+2k)) * p/q
//   d_k = k(n+k) / ((l+2k)(l+2k+1)) * p/q
//
// Truncating after -c_k gives C_k, after +d_k gives D_k. Even-k convergents
// sit below S and increase; odd-k convergents sit above S and decrease;
// D_{n-l-1} equals S.

#include <cstdint>
#include <optional>
#include <vector>

#include "probgems/numerics.hpp"

namespace probgems {

struct TailQuery {
  std::int64_t n = 0;
  std::int64_t l = 0;
  double p = 0.0;

  double q() const { return 1.0 - p; }

  /// Checks 0 <= l < n, 0 < p < 1 and l > np. Throws MethodInapplicable when
  /// l <= np (use the complement helper or the exact oracle instead).
  static TailQuery make(std::int64_t n, std::int64_t l, double p);
};

struct CfCoefficients {
  std::int64_t k = 0;
  double c = 0.0;
  double d = 0.0;
};

CfCoefficients cf_coefficients(const TailQuery& query, std::int64_t k);

/// Numerators/denominators of the interleaved convergents Q_m = A_m / B_m with
/// Q_{2k} = C_k and Q_{2k+1} = D_k. Holds the last two indices so it can be
/// advanced in place; only the ratio carries meaning.
class ConvergentState {
 public:
  /// A_0 = 0, A_1 = 1, B_0 = B_1 = 1.
  ConvergentState() = default;

  /// Applies X_{2k} = X_{2k-1} - c_k X_{2k-2} then X_{2k+1} = X_{2k} + d_k X_{2k-1}.
  /// Requires index() == 2k - 1.
  void advance(const CfCoefficients& coeffs);

  /// Multiplies every stored numerator and denominator by 2^exponent.
  void rescale(int exponent);

  std::int64_t index() const { return m_; }
  double numerator() const { return a_; }
  double denominator() const { return b_; }
  double ratio() const { return a_ / b_; }
  /// Q_{m-1}.
  double previous_ratio() const { return a_prev_ / b_prev_; }
  /// Total power of two applied by renormalization so far.
  std::int64_t scale_exponent() const { return scale_; }

  /// Renormalize once |A| or |B| passes 2^500 (about 3e150).
  static constexpr int kRescaleBits = 500;

 private:
  std::int64_t m_ = 1;
  double a_prev_ = 0.0, a_ = 1.0;
  double b_prev_ = 1.0, b_ = 1.0;
  std::int64_t scale_ = 0;
};

struct TailBracket {
  double lower = 0.0;
  double upper = 1.0;
  std::int64_t k_used = 0;
  LogProb lead_term_log;
  bool converged = false;
  /// Reached k = n-l-1, where D_k is the series factor itself.
  bool terminal = false;
};

/// Convergent pairs (C_k, D_k) of the series factor, k = 1, 2, ...
struct ConvergentTrace {
  std::vector<double> c_values;
  std::vector<double> d_values;
};

/// Brackets P(S_n > l) between lead_term * (best lower convergent) and
/// lead_term * (best upper convergent). Stops once upper - lower <= tol * upper,
/// at k = n-l-1, or at k_max (then converged == false).
TailBracket bracket_tail(const TailQuery& query, double tol,
                         std::optional<std::int64_t> k_max = std::nullopt,
                         ConvergentTrace* trace = nullptr);

/// Left tail P(S_n < j) for j < np, via the flipped coin: n - S_n ~ Bin(n, q).
TailBracket bracket_left_tail(std::int64_t n, std::int64_t j, double p, double tol,
                              std::optional<std::int64_t> k_max = std::nullopt);

/// P(S_n >= j) = C(n,j) p^j q^(n-j) * q * F(n+1, 1; j+1; p), summed until the
/// relative term drops below 1e-17. Throws NotConverged past max_terms.
double bahadur_tail(std::int64_t n, std::int64_t j, double p, std::int64_t max_terms = 10'000'000);

}  // namespace probgems

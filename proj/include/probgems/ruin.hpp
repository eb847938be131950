#pragma once

// Gambler's ruin with unequal stakes. A holds a, B holds b; each game A wins
// with probability p and collects beta from B, or loses alpha to B. A is
// ruined once A's capital drops below alpha, B once B's drops below beta.

#include <complex>
#include <cstdint>
#include <vector>

namespace probgems {

struct RuinGame {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t alpha = 1;
  std::int64_t beta = 1;
  double p = 0.5;

  double q() const { return 1.0 - p; }
  bool is_fair(double tol = 1e-12) const;

  /// Checks positivity, a >= alpha, b >= beta and 0 < p < 1.
  static RuinGame make(std::int64_t a, std::int64_t b, std::int64_t alpha, std::int64_t beta, double p);
};

struct RuinBounds {
  double lower = 0.0;
  double upper = 1.0;
};

/// (b - beta + 1)/(a + b - beta + 1) <= y_a <= b/(a + b - alpha + 1) for fair
/// games (p beta = q alpha). Throws MethodInapplicable for unfair games.
RuinBounds ruin_bounds_fair(const RuinGame& game);

struct RuinProbabilities {
  double a_ruined = 0.0;
  double b_ruined = 0.0;
  /// Max-norm residual of the absorption system for A's ruin.
  double residual = 0.0;
};

/// Absorption probabilities of the capital chain on {0, ..., a+b}, solved by
/// banded elimination. Throws NumericError if the residual exceeds tol.
RuinProbabilities ruin_exact_chain(const RuinGame& game, double tol = 1e-12);

/// Classical equal-stakes (alpha = beta = 1) ruin probability of A.
double classical_ruin(std::int64_t a, std::int64_t b, double p);

struct RootReport {
  std::vector<std::complex<double>> roots;  // z = 1 first
  double max_residual = 0.0;
};

/// All alpha+beta roots of p z^(alpha+beta) - z^alpha + q = 0. The known root
/// z = 1 is deflated first; the rest come from the companion matrix and are
/// polished by Newton steps on the undeflated polynomial.
RootReport ruin_root_equation(const RuinGame& game);

}  // namespace probgems

#include "probgems/ruin.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "probgems/errors.hpp"

namespace probgems {

bool RuinGame::is_fair(double tol) const {
  return std::abs(p * static_cast<double>(beta) - q() * static_cast<double>(alpha)) <= tol;
}

RuinGame RuinGame::make(std::int64_t a, std::int64_t b, std::int64_t alpha, std::int64_t beta, double p) {
  if (alpha < 1 || beta < 1) throw DomainError("ruin: stakes must be positive");
  if (a < alpha) throw DomainError("ruin: A's fortune must cover A's stake (a >= alpha)");
  if (b < beta) throw DomainError("ruin: B's fortune must cover B's stake (b >= beta)");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("ruin: p must lie in (0, 1)");
  return {a, b, alpha, beta, p};
}

RuinBounds ruin_bounds_fair(const RuinGame& game) {
  if (!game.is_fair())
    throw MethodInapplicable("ruin_bounds_fair: game is not fair (p*beta != q*alpha); use the exact chain");
  const double a = static_cast<double>(game.a), b = static_cast<double>(game.b);
  const double al = static_cast<double>(game.alpha), be = static_cast<double>(game.beta);
  return {(b - be + 1.0) / (a + b - be + 1.0), b / (a + b - al + 1.0)};
}

namespace {

// Solves (I - P) y = rhs on the transient capitals alpha..a+b-beta. Row x has
// -q at column x - alpha and -p at x + beta, so the band is alpha below and
// beta above the diagonal. Elimination without pivoting is stable here: the
// matrix is a nonsingular M-matrix.
std::vector<double> solve_absorption(const RuinGame& g, bool a_side, double& residual) {
  const std::int64_t lo = g.alpha, hi = g.a + g.b - g.beta;
  const auto size = static_cast<std::size_t>(hi - lo + 1);
  const auto below = static_cast<std::size_t>(g.alpha), above = static_cast<std::size_t>(g.beta);
  const std::size_t width = below + above + 1;
  // band[row][below + (col - row)]
  std::vector<double> band(size * width, 0.0);
  std::vector<double> rhs(size, 0.0);
  auto at = [&](std::size_t row, std::size_t col) -> double& { return band[row * width + below + col - row]; };
  const double p = g.p, q = g.q();
  for (std::size_t i = 0; i < size; ++i) {
    const std::int64_t x = lo + static_cast<std::int64_t>(i);
    at(i, i) = 1.0;
    const std::int64_t up = x + g.beta, down = x - g.alpha;
    if (up > hi) {
      if (!a_side) rhs[i] += p;
    } else {
      at(i, i + above) -= p;
    }
    if (down < lo) {
      if (a_side) rhs[i] += q;
    } else {
      at(i, i - below) -= q;
    }
  }
  const std::vector<double> original = band;
  const std::vector<double> original_rhs = rhs;

  for (std::size_t k = 0; k < size; ++k) {
    const double pivot = at(k, k);
    if (pivot == 0.0) throw NumericError("ruin_exact_chain: zero pivot");
    const std::size_t row_end = std::min(size, k + below + 1);
    const std::size_t col_end = std::min(size, k + above + 1);
    for (std::size_t i = k + 1; i < row_end; ++i) {
      const double f = at(i, k) / pivot;
      if (f == 0.0) continue;
      at(i, k) = 0.0;
      for (std::size_t j = k + 1; j < col_end; ++j) at(i, j) -= f * at(k, j);
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<double> y(size, 0.0);
  for (std::size_t k = size; k-- > 0;) {
    double v = rhs[k];
    const std::size_t col_end = std::min(size, k + above + 1);
    for (std::size_t j = k + 1; j < col_end; ++j) v -= at(k, j) * y[j];
    y[k] = v / at(k, k);
  }

  residual = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    double v = -original_rhs[i];
    const std::size_t first = i >= below ? i - below : 0;
    const std::size_t last = std::min(size, i + above + 1);
    for (std::size_t j = first; j < last; ++j) v += original[i * width + below + j - i] * y[j];
    residual = std::max(residual, std::abs(v));
  }
  return y;
}

}  // namespace

RuinProbabilities ruin_exact_chain(const RuinGame& game, double tol) {
  if (!(tol > 0.0)) throw DomainError("ruin_exact_chain: tol must be positive");
  RuinGame::make(game.a, game.b, game.alpha, game.beta, game.p);
  const auto idx = static_cast<std::size_t>(game.a - game.alpha);
  double res_a = 0.0, res_b = 0.0;
  const auto ya = solve_absorption(game, true, res_a);
  const auto yb = solve_absorption(game, false, res_b);
  RuinProbabilities out{ya[idx], yb[idx], std::max(res_a, res_b)};
  if (out.residual > tol)
    throw NumericError("ruin_exact_chain: residual " + std::to_string(out.residual) + " exceeds tolerance");
  return out;
}

double classical_ruin(std::int64_t a, std::int64_t b, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("classical_ruin: p must lie in (0, 1)");
  const double q = 1.0 - p;
  const double da = static_cast<double>(a), total = static_cast<double>(a + b);
  if (std::abs(p - q) < 1e-15) return static_cast<double>(b) / total;
  // Ruin of A from capital a with unit stakes: (r^a - r^(a+b)) / (1 - r^(a+b)), r = q/p.
  const double r = q / p;
  if (r > 1.0) {
    // Divide through by r^(a+b) to keep powers bounded.
    const double s = 1.0 / r;
    return (std::pow(s, static_cast<double>(b)) - 1.0) / (std::pow(s, total) - 1.0);
  }
  return (std::pow(r, da) - std::pow(r, total)) / (1.0 - std::pow(r, total));
}

RootReport ruin_root_equation(const RuinGame& game) {
  RuinGame::make(game.a, game.b, game.alpha, game.beta, game.p);
  const int alpha = static_cast<int>(game.alpha), degree = static_cast<int>(game.alpha + game.beta);
  const double p = game.p, q = game.q();
  // Coefficients, highest degree first: p z^d - z^alpha + q.
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
  coeffs[0] = p;
  coeffs[static_cast<std::size_t>(degree - alpha)] -= 1.0;
  coeffs[static_cast<std::size_t>(degree)] += q;

  auto eval = [&](std::complex<double> z, std::complex<double>& deriv) {
    std::complex<double> v = 0.0;
    deriv = 0.0;
    for (double c : coeffs) {
      deriv = deriv * z + v;
      v = v * z + c;
    }
    return v;
  };

  // Synthetic division by (z - 1).
  std::vector<double> reduced(static_cast<std::size_t>(degree), 0.0);
  double carry = 0.0;
  for (int i = 0; i < degree; ++i) {
    carry = carry + coeffs[static_cast<std::size_t>(i)];
    reduced[static_cast<std::size_t>(i)] = carry;
  }

  RootReport out;
  out.roots.emplace_back(1.0, 0.0);
  const int m = degree - 1;
  if (m >= 1) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
    for (int j = 0; j < m; ++j) companion(0, j) = -reduced[static_cast<std::size_t>(j + 1)] / reduced[0];
    for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw NumericError("ruin_root_equation: eigenvalue solver failed");
    for (int i = 0; i < m; ++i) {
      std::complex<double> z = solver.eigenvalues()[i];
      for (int it = 0; it < 8; ++it) {
        std::complex<double> d;
        const auto v = eval(z, d);
        if (std::abs(d) == 0.0) break;
        const auto next = z - v / d;
        std::complex<double> d2;
        if (std::abs(eval(next, d2)) >= std::abs(v)) break;
        z = next;
      }
      out.roots.push_back(z);
    }
  }
  for (const auto& z : out.roots) {
    std::complex<double> d;
    out.max_residual = std::max(out.max_residual, std::abs(eval(z, d)));
  }
  if (out.max_residual > 1e-10)
    throw NumericError("ruin_root_equation: residual " + std::to_string(out.max_residual) + " above 1e-10");
  return out;
}

}  // namespace probgems

#pragma once

// Lexis dispersion theory for n series of s independent trials each.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace probgems {

/// Per-trial success probabilities p_ij, n series (rows) by s trials (columns).
class TrialMatrix {
 public:
  TrialMatrix(std::size_t series, std::size_t trials, std::vector<double> row_major);
  static TrialMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t series() const { return n_; }
  std::size_t trials() const { return s_; }
  std::size_t total() const { return n_ * s_; }
  double at(std::size_t i, std::size_t j) const { return p_[i * s_ + j]; }

  double row_mean(std::size_t i) const;
  double grand_mean() const;

 private:
  std::size_t n_, s_;
  std::vector<double> p_;
};

/// Successes m_i observed in each of n series of s trials.
class CountVector {
 public:
  CountVector(std::vector<std::int64_t> counts, std::int64_t trials_per_series);

  const std::vector<std::int64_t>& counts() const { return m_; }
  std::int64_t trials() const { return s_; }
  std::size_t series() const { return m_.size(); }
  std::int64_t total_trials() const { return static_cast<std::int64_t>(m_.size()) * s_; }
  std::int64_t total_successes() const;

 private:
  std::vector<std::int64_t> m_;
  std::int64_t s_;
};

enum class Regime { Bernoulli, Lexis, Poisson, Mixed };

std::string to_string(Regime regime);

struct DispersionReport {
  /// E(Q) from Var(m_i) = sum_j p_ij (1 - p_ij) and E(m_i) = s p_i.
  double d = 0.0;
  /// 1 + (s-1)/(n p q) sum_i (p_i - p)^2 - 1/(N p q) sum_ij (p_i - p_ij)^2.
  double d_formula = 0.0;
  Regime regime = Regime::Mixed;
};

/// Q = sum_i (m_i - s p)^2 / (N p (1 - p)).
double dispersion_q(const CountVector& counts, double p);

DispersionReport expected_d(const TrialMatrix& trials);

/// Regime from the pattern of p_ij, equality tested to 1e-12 absolute.
Regime classify_regime(const TrialMatrix& trials);

/// Plug-in coefficient with p replaced by M/N; 1 when M is 0 or N.
double empirical_q_hat(const CountVector& counts);

struct QHatMoments {
  double mean = 1.0;
  double variance = 0.0;
  /// 2N(N-n) / ((n-1)(N-2)(N-3)).
  double bound = 0.0;
  /// 2 / (n-1), only for n >= 5.
  std::optional<double> simple_bound;
};

/// Exact mean and variance of Q-hat in the Bernoulli case (all p_ij = p).
QHatMoments moments_q_hat(std::int64_t n, std::int64_t s, double p);

}  // namespace probgems

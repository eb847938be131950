#include "probgems/lexis.hpp"

#include <cmath>

#include "probgems/errors.hpp"
#include "probgems/numerics.hpp"

namespace probgems {

namespace {
constexpr double kSameProb = 1e-12;
}

TrialMatrix::TrialMatrix(std::size_t series, std::size_t trials, std::vector<double> row_major)
    : n_(series), s_(trials), p_(std::move(row_major)) {
  if (n_ < 1 || s_ < 1) throw DomainError("TrialMatrix: need at least one series and one trial");
  if (p_.size() != n_ * s_) throw DomainError("TrialMatrix: entry count does not match n * s");
  for (double v : p_)
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("TrialMatrix: probabilities must lie in [0, 1]");
}

TrialMatrix TrialMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw DomainError("TrialMatrix: no rows");
  std::vector<double> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw DomainError("TrialMatrix: ragged rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return TrialMatrix(rows.size(), rows.front().size(), std::move(flat));
}

double TrialMatrix::row_mean(std::size_t i) const {
  CompensatedSum acc;
  for (std::size_t j = 0; j < s_; ++j) acc.add(at(i, j));
  return acc.value() / static_cast<double>(s_);
}

double TrialMatrix::grand_mean() const {
  CompensatedSum acc;
  for (std::size_t i = 0; i < n_; ++i) acc.add(row_mean(i));
  return acc.value() / static_cast<double>(n_);
}

CountVector::CountVector(std::vector<std::int64_t> counts, std::int64_t trials_per_series)
    : m_(std::move(counts)), s_(trials_per_series) {
  if (s_ < 1) throw DomainError("CountVector: trials per series must be positive");
  if (m_.empty()) throw DomainError("CountVector: no series");
  for (auto m : m_)
    if (m < 0 || m > s_) throw DomainError("CountVector: counts must lie in [0, s]");
}

std::int64_t CountVector::total_successes() const {
  std::int64_t total = 0;
  for (auto m : m_) total += m;
  return total;
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Bernoulli: return "bernoulli";
    case Regime::Lexis: return "lexis";
    case Regime::Poisson: return "poisson";
    case Regime::Mixed: return "mixed";
  }
  return "mixed";
}

double dispersion_q(const CountVector& counts, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("dispersion_q: p must lie in (0, 1)");
  const double s = static_cast<double>(counts.trials());
  CompensatedSum acc;
  for (auto m : counts.counts()) {
    const double dev = static_cast<double>(m) - s * p;
    acc.add(dev * dev);
  }
  return acc.value() / (static_cast<double>(counts.total_trials()) * p * (1.0 - p));
}

Regime classify_regime(const TrialMatrix& t) {
  bool rows_constant = true;  // p_ij = p_i
  for (std::size_t i = 0; i < t.series() && rows_constant; ++i)
    for (std::size_t j = 1; j < t.trials(); ++j)
      if (std::abs(t.at(i, j) - t.at(i, 0)) > kSameProb) {
        rows_constant = false;
        break;
      }
  bool rows_identical = true;  // p_{i1 j} = p_{i2 j}
  for (std::size_t i = 1; i < t.series() && rows_identical; ++i)
    for (std::size_t j = 0; j < t.trials(); ++j)
      if (std::abs(t.at(i, j) - t.at(0, j)) > kSameProb) {
        rows_identical = false;
        break;
      }
  if (rows_constant && rows_identical) return Regime::Bernoulli;
  if (rows_constant) return Regime::Lexis;
  if (rows_identical) return Regime::Poisson;
  return Regime::Mixed;
}

DispersionReport expected_d(const TrialMatrix& t) {
  const double pbar = t.grand_mean();
  if (!(pbar > 0.0 && pbar < 1.0)) throw DomainError("expected_d: mean probability must lie in (0, 1)");
  const double n = static_cast<double>(t.series());
  const double s = static_cast<double>(t.trials());
  const double big_n = n * s;
  const double pq = pbar * (1.0 - pbar);

  CompensatedSum variance;  // sum_ij p_ij (1 - p_ij)
  CompensatedSum between;   // sum_i (p_i - pbar)^2
  CompensatedSum within;    // sum_ij (p_i - p_ij)^2
  for (std::size_t i = 0; i < t.series(); ++i) {
    const double pi = t.row_mean(i);
    between.add((pi - pbar) * (pi - pbar));
    for (std::size_t j = 0; j < t.trials(); ++j) {
      const double pij = t.at(i, j);
      variance.add(pij * (1.0 - pij));
      within.add((pi - pij) * (pi - pij));
    }
  }

  DispersionReport out;
  out.d = (variance.value() + s * s * between.value()) / (big_n * pq);
  out.d_formula = 1.0 + (s - 1.0) / (n * pq) * between.value() - within.value() / (big_n * pq);
  out.regime = classify_regime(t);
  return out;
}

double empirical_q_hat(const CountVector& counts) {
  const auto n = static_cast<std::int64_t>(counts.series());
  if (n < 2) throw DomainError("empirical_q_hat: need at least two series");
  const std::int64_t big_n = counts.total_trials();
  const std::int64_t big_m = counts.total_successes();
  if (big_m == 0 || big_m == big_n) return 1.0;
  const double share = static_cast<double>(counts.trials()) * static_cast<double>(big_m) / static_cast<double>(big_n);
  CompensatedSum acc;
  for (auto m : counts.counts()) {
    const double dev = static_cast<double>(m) - share;
    acc.add(dev * dev);
  }
  const double prefactor = static_cast<double>(n) * static_cast<double>(big_n - 1) / static_cast<double>(n - 1);
  return prefactor * acc.value() / (static_cast<double>(big_m) * static_cast<double>(big_n - big_m));
}

QHatMoments moments_q_hat(std::int64_t n, std::int64_t s, double p) {
  if (n < 2) throw DomainError("moments_q_hat: need n >= 2");
  if (s < 1) throw DomainError("moments_q_hat: need s >= 1");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("moments_q_hat: p must lie in (0, 1)");
  const std::int64_t big_n = n * s;
  if (big_n <= 3) throw DomainError("moments_q_hat: need N = n*s >= 4");

  const double dn = static_cast<double>(n), dN = static_cast<double>(big_n);
  QHatMoments out;
  out.bound = 2.0 * dN * (dN - dn) / ((dn - 1.0) * (dN - 2.0) * (dN - 3.0));
  CompensatedSum acc;
  for (std::int64_t m = 1; m < big_n; ++m) {
    const double dm = static_cast<double>(m);
    const double w = (dm - 1.0) / dm * (dN - dm - 1.0) / (dN - dm);
    if (w == 0.0) continue;
    acc.add(w * log_binom_pmf(big_n, m, p).prob());
  }
  out.variance = out.bound * acc.value();
  if (n >= 5) out.simple_bound = 2.0 / (dn - 1.0);
  return out;
}

}  // namespace probgems

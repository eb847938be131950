#include "probgems/concentration.hpp"

#include <cmath>
#include <random>
#include <string>

#include "probgems/errors.hpp"

namespace probgems {

BernsteinInput BernsteinInput::make(double variance_sum, double c, double t) {
  if (!(variance_sum > 0.0)) throw DomainError("bernstein: B_n^2 must be positive");
  if (!(c > 0.0)) throw DomainError("bernstein: c must be positive");
  if (!(t >= 0.0)) throw DomainError("bernstein: t must be non-negative");
  return {variance_sum, c, t};
}

BernsteinInput BernsteinInput::bounded(double variance_sum, double bound_m, double t) {
  if (!(bound_m > 0.0)) throw DomainError("bernstein: M must be positive");
  return make(variance_sum, bound_m / 3.0, t);
}

double bernstein_bound(const BernsteinInput& in) {
  const auto checked = BernsteinInput::make(in.variance_sum, in.c, in.t);
  return 2.0 * std::exp(-checked.t * checked.t / (2.0 * checked.variance_sum + 2.0 * checked.c * checked.t));
}

double uniform_abs_moment(double m, int k) { return std::pow(m, k) / (k + 1); }

MomentCheckReport moment_condition_check(const std::vector<double>& sigma_sq, double c, const MomentFn& moment_fn,
                                         int k_max) {
  if (!(c > 0.0)) throw DomainError("moment_condition_check: c must be positive");
  if (k_max < 3) throw DomainError("moment_condition_check: k_max must be at least 3");
  MomentCheckReport report;
  for (std::size_t j = 0; j < sigma_sq.size(); ++j) {
    if (!(sigma_sq[j] > 0.0)) throw DomainError("moment_condition_check: variances must be positive");
    double factorial = 2.0;  // 2!
    for (int k = 3; k <= k_max; ++k) {
      factorial *= k;
      double moment = 0.0;
      try {
        moment = moment_fn(j, k);
      } catch (const std::exception& e) {
        throw NumericError("moment evaluator failed for variable " + std::to_string(j) + ", k=" + std::to_string(k) +
                           ": " + e.what());
      }
      MomentCheckEntry entry{j, k, moment, factorial * sigma_sq[j] / 2.0 * std::pow(c, k - 2), false};
      // Relative slack of a few ulps: the uniform case is tight at k = 3.
      entry.holds = entry.moment <= entry.allowance * (1.0 + 1e-12);
      if (!entry.holds && report.all_hold) {
        report.all_hold = false;
        report.first_failure = entry;
      }
      report.entries.push_back(entry);
    }
  }
  return report;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<MonteCarloTail> simulate_uniform_sum_tails(std::int64_t n, double m, const std::vector<double>& ts,
                                                       std::int64_t samples, std::uint64_t seed, int partitions) {
  if (n < 1) throw DomainError("simulate: n must be positive");
  if (!(m > 0.0)) throw DomainError("simulate: m must be positive");
  if (samples < 1) throw DomainError("simulate: need at least one sample");
  if (partitions < 1) throw DomainError("simulate: need at least one partition");
  std::vector<std::int64_t> hits(ts.size(), 0);
  for (int block = 0; block < partitions; ++block) {
    const std::int64_t begin = samples * block / partitions;
    const std::int64_t end = samples * (block + 1) / partitions;
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(block))));
    std::uniform_real_distribution<double> draw(-m, m);
    for (std::int64_t s = begin; s < end; ++s) {
      double sum = 0.0;
      for (std::int64_t i = 0; i < n; ++i) sum += draw(rng);
      const double mag = std::abs(sum);
      for (std::size_t k = 0; k < ts.size(); ++k)
        if (mag > ts[k]) ++hits[k];
    }
  }
  std::vector<MonteCarloTail> out;
  for (auto h : hits) {
    const double est = static_cast<double>(h) / static_cast<double>(samples);
    out.push_back({est, std::sqrt(est * (1.0 - est) / static_cast<double>(samples)), samples});
  }
  return out;
}

MonteCarloTail simulate_uniform_sum_tail(std::int64_t n, double m, double t, std::int64_t samples,
                                         std::uint64_t seed, int partitions) {
  return simulate_uniform_sum_tails(n, m, {t}, samples, seed, partitions).front();
}

}  // namespace probgems

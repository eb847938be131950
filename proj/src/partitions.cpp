#include "probgems/partitions.hpp"

#include <cmath>
#include <numbers>

#include "probgems/errors.hpp"

namespace probgems {

std::vector<BigInt> partition_table(std::uint32_t n_max) {
  std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2, signs + + - - ...
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      const bool add = k % 2 == 1;
      const BigInt& t1 = p[static_cast<std::size_t>(n - g1)];
      if (add)
        acc += t1;
      else
        acc -= t1;
      if (g2 <= n) {
        const BigInt& t2 = p[static_cast<std::size_t>(n - g2)];
        if (add)
          acc += t2;
        else
          acc -= t2;
      }
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p;
}

BigInt partition_exact(std::uint32_t n) { return partition_table(n).back(); }

PartitionAsymptotic partition_asymptotic(std::uint32_t n) {
  if (n == 0) throw DomainError("partition_asymptotic: n must be positive");
  constexpr long double pi = std::numbers::pi_v<long double>;
  const long double sqrt3 = std::sqrt(3.0L);
  const long double dn = n;
  const long double shifted = dn - 1.0L / 24.0L;

  const long double log_simple = pi * std::sqrt(2.0L * dn / 3.0L) - std::log(4.0L * dn * sqrt3);
  const long double correction = 1.0L - sqrt3 / (pi * std::sqrt(2.0L * dn - 1.0L / 12.0L));
  const long double log_refined =
      pi * std::sqrt(2.0L / 3.0L * shifted) - std::log(4.0L * sqrt3 * shifted) + std::log(correction);

  PartitionAsymptotic out;
  out.log_simple = static_cast<double>(log_simple);
  out.log_refined = static_cast<double>(log_refined);
  out.simple = std::exp(log_simple);
  out.refined = std::exp(log_refined);
  return out;
}

}  // namespace probgems

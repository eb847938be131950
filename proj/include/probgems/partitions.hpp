#pragma once

#include <cstdint>
#include <vector>

#include "probgems/exact.hpp"

namespace probgems {

/// p(0), ..., p(n_max) by Euler's pentagonal-number recurrence.
std::vector<BigInt> partition_table(std::uint32_t n_max);

/// p(n), the number of partitions of n.
BigInt partition_exact(std::uint32_t n);

struct PartitionAsymptotic {
  /// exp(pi sqrt(2n/3)) / (4 n sqrt 3)
  long double simple = 0.0L;
  /// exp(pi sqrt(2/3 (n - 1/24))) / (4 sqrt 3 (n - 1/24)) * (1 - sqrt 3 / (pi sqrt(2n - 1/12)))
  long double refined = 0.0L;
  double log_simple = 0.0;
  double log_refined = 0.0;
};

/// Both leading-order estimates; evaluated in log space. n >= 1.
PartitionAsymptotic partition_asymptotic(std::uint32_t n);

}  // namespace probgems

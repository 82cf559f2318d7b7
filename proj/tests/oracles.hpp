// Test-only oracles, kept independent of the implementation paths they check.
#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

// Distinct-partition counts q(0..max) by the classic coefficient expansion of
// prod_k (1 + x^k).
inline std::vector<std::int64_t> distinct_partition_counts(std::int64_t max) {
  std::vector<std::int64_t> q(static_cast<std::size_t>(max + 1), 0);
  q[0] = 1;
  for (std::int64_t k = 1; k <= max; ++k)
    for (std::int64_t n = max; n >= k; --n)
      q[static_cast<std::size_t>(n)] += q[static_cast<std::size_t>(n - k)];
  return q;
}

// Same, restricted to parts of one parity.
inline std::vector<std::int64_t> distinct_parity_counts(std::int64_t max, bool odd) {
  std::vector<std::int64_t> q(static_cast<std::size_t>(max + 1), 0);
  q[0] = 1;
  for (std::int64_t k = odd ? 1 : 2; k <= max; k += 2)
    for (std::int64_t n = max; n >= k; --n)
      q[static_cast<std::size_t>(n)] += q[static_cast<std::size_t>(n - k)];
  return q;
}

}  // namespace oracle

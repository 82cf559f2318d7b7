#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"

namespace unref {

using Part = std::int64_t;

Part triangular_number(Part n);

/// Partition into distinct parts, stored ascending (lambda_1 < ... < lambda_t).
class DistinctPartition {
 public:
  /// Validates and sorts; input order does not matter.
  static DistinctPartition make(std::vector<Part> values);

  const std::vector<Part>& parts() const { return parts_; }
  Part weight() const { return weight_; }
  int size() const { return static_cast<int>(parts_.size()); }
  Part largest() const { return parts_.back(); }
  bool is_proper() const { return parts_.size() >= 2; }
  bool contains(Part v) const {
    return std::binary_search(parts_.begin(), parts_.end(), v);
  }

  /// {1,...,lambda_t} minus the parts, ascending.
  std::vector<Part> missing_parts() const;
  Part missing_count() const { return largest() - size(); }

  bool operator==(const DistinctPartition&) const = default;
  bool operator<(const DistinctPartition& o) const { return parts_ < o.parts_; }

 private:
  DistinctPartition() = default;
  std::vector<Part> parts_;
  Part weight_ = 0;
};

/// N = T_n - d with 0 <= d <= n-1, i.e. T_{n-1} < N <= T_n.
struct WeightDecomposition {
  Part n = 0;
  Part d = 0;
  Part triangular = 0;  // T_n
  Part value() const { return triangular - d; }
};

WeightDecomposition triangular_decompose(Part N);

enum class Parity { Any, OddOnly, EvenOnly };

struct PartFilter {
  int min_parts = 1;
  std::optional<Part> max_part;
  Parity parity = Parity::Any;
};

namespace detail {

inline bool parity_admits(Parity p, Part v) {
  switch (p) {
    case Parity::OddOnly: return v % 2 == 1;
    case Parity::EvenOnly: return v % 2 == 0;
    default: return true;
  }
}

// Lexicographic-order enumeration of distinct-part partitions. The visitor
// receives the ascending parts as a span valid only during the call; returning
// false stops the enumeration. first_min/first_max bound only the smallest
// part, so disjoint subranges can run concurrently.
template <class Visit>
bool walk_distinct(Part rem, Part lo, const PartFilter& f, std::vector<Part>& acc,
                   const Visit& visit) {
  const Part cap = f.max_part.value_or(rem);
  for (Part a = lo; a <= rem && a <= cap; ++a) {
    if (!parity_admits(f.parity, a)) continue;
    // Abandon once even taking every value in (a, cap] cannot cover the rest.
    if (f.max_part) {
      const Part tail = rem - a;
      const Part reachable = (cap - a) * (cap + a + 1) / 2;
      if (tail > reachable) break;
    }
    acc.push_back(a);
    bool keep = true;
    if (rem == a) {
      if (static_cast<int>(acc.size()) >= f.min_parts)
        keep = visit(std::span<const Part>(acc));
    } else {
      keep = walk_distinct(rem - a, a + 1, f, acc, visit);
    }
    acc.pop_back();
    if (!keep) return false;
  }
  return true;
}

template <class Visit>
void enumerate_distinct_impl(Part N, const PartFilter& f, Part first_min, Part first_max,
                             const Visit& visit) {
  if (N < 1) return;
  std::vector<Part> acc;
  acc.reserve(32);
  const Part cap = f.max_part.value_or(N);
  const Part hi = std::min({N, cap, first_max});
  for (Part a = std::max<Part>(1, first_min); a <= hi; ++a) {
    if (!parity_admits(f.parity, a)) continue;
    acc.push_back(a);
    bool keep = true;
    if (N == a) {
      if (static_cast<int>(acc.size()) >= f.min_parts)
        keep = visit(std::span<const Part>(acc));
    } else {
      keep = walk_distinct(N - a, a + 1, f, acc, visit);
    }
    acc.pop_back();
    if (!keep) return;
  }
}

}  // namespace detail

using PartVisitor = std::function<bool(std::span<const Part>)>;

/// Every distinct-part partition of N satisfying the filter, each exactly
/// once, in lexicographic order of the ascending part sequence.
void enumerate_distinct(Part N, const PartFilter& filter, const PartVisitor& visit);

/// Restriction of the stream to smallest part in [first_min, first_max].
void enumerate_distinct(Part N, const PartFilter& filter, Part first_min, Part first_max,
                        const PartVisitor& visit);

std::vector<DistinctPartition> collect_distinct(Part N, const PartFilter& filter);

}  // namespace unref

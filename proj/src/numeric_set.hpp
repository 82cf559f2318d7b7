#pragma once

#include <string>
#include <vector>

#include "partition.hpp"

namespace unref {

/// Cofinite subset of the non-negative integers containing 0, stored by its
/// finite gap set. Gaps are the complement; every integer above the Frobenius
/// number belongs to the set.
class NumericalSet {
 public:
  /// The empty gap set (the whole of the naturals) is legal.
  static NumericalSet from_gaps(std::vector<Part> gaps);
  static NumericalSet from_partition(const DistinctPartition& p);

  /// Accepts the textual form "0,3,4,7,9,->": members up to F+1, then the
  /// arrow token.
  static NumericalSet parse(const std::string& text);
  std::string format() const;

  const std::vector<Part>& gaps() const { return gaps_; }
  Part frobenius() const { return gaps_.empty() ? 0 : gaps_.back(); }
  Part genus() const { return static_cast<Part>(gaps_.size()); }
  Part multiplicity() const;

  bool contains(Part v) const {
    if (v < 0) return false;
    return !std::binary_search(gaps_.begin(), gaps_.end(), v);
  }

  /// Members in [0, bound], ascending; element i is the conventional s_i.
  std::vector<Part> small_elements(Part bound) const;

  struct ClosureResult {
    bool closed = true;
    Part witness_a = 0;  // valid only when !closed: a + b is a gap
    Part witness_b = 0;
  };
  /// Addition-closure test over member pairs with sum <= Frobenius; sums
  /// beyond the Frobenius number are members automatically.
  ClosureResult closure() const;
  bool is_semigroup() const { return closure().closed; }

  /// Gaps as a distinct-part partition; requires at least one gap.
  DistinctPartition to_partition() const;

  bool operator==(const NumericalSet&) const = default;

 private:
  NumericalSet() = default;
  std::vector<Part> gaps_;  // sorted ascending, all >= 1
};

}  // namespace unref

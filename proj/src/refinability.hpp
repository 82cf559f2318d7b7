#pragma once

#include <optional>

#include "diagram.hpp"

namespace unref {

/// A refinement witness: two distinct missing parts summing to a part.
struct Witness {
  Part mu_i = 0;
  Part mu_j = 0;
  Part part = 0;
  bool operator==(const Witness&) const = default;
};

struct OffendingCell {
  int row = 0;
  Part col = 0;
  Part hook = 0;
  bool operator==(const OffendingCell&) const = default;
};

struct RefinabilityVerdict {
  bool unrefinable = false;
  std::optional<Witness> witness;                          // definitional route
  std::optional<std::vector<OffendingCell>> offending;     // geometric route
};

/// Missing-part pair scan. The witness, when present, is the first hit
/// scanning parts ascending, then the larger missing summand ascending.
RefinabilityVerdict is_unrefinable_definitional(const DistinctPartition& p);

/// Hook criterion on the diagram of the associated numerical set: every hook
/// either occurs in the first column or the first-column hook of its row is
/// its double. Offending cells are listed in row-major order.
RefinabilityVerdict is_unrefinable_geometric(const DistinctPartition& p);

/// Allocation-light definitional test for enumeration loops. scratch is
/// resized as needed and reused across calls.
bool quick_unrefinable(std::span<const Part> parts, std::vector<char>& scratch);

struct AgreeResult {
  bool agree = true;
  std::optional<DistinctPartition> divergence;  // first, in enumeration order
};

/// Runs both deciders over every proper distinct-part partition of N.
AgreeResult verdicts_agree(Part N, int jobs = 1);

}  // namespace unref

#pragma once

#include <optional>

#include "refinability.hpp"

namespace unref {

enum class BoundRegime { Triangular, D1, D2, D3, GeneralOdd, GeneralEven };

/// Sharp upper bound for the largest part of a maximal unrefinable partition
/// of T_n - d.
struct BoundSpec {
  Part n = 0;
  Part d = 0;
  Part bound = 0;
  BoundRegime regime = BoundRegime::Triangular;
};

/// OutOfRange for n < 6: the small cases are sporadic and handled by brute
/// force only.
BoundSpec lambda_t_bound(Part n, Part d);

const char* regime_name(BoundRegime r);

/// All unrefinable proper partitions of N, lexicographic order. Empty for N < 3.
void enumerate_unrefinable(Part N, const PartVisitor& visit);
std::vector<DistinctPartition> collect_unrefinable(Part N, int jobs = 1);
Part count_unrefinable(Part N, int jobs = 1);

enum class SearchMode {
  Naive,      // filter the full distinct-partition stream
  Optimized,  // search only the layer with the largest part pinned to the
              // Table bound, using the forced pair structure
  Auto,       // naive up to the exhaustive cap, optimized beyond
};

inline constexpr Part kExhaustiveCap = 120;  // T_15

/// Partitions of N attaining the maximal largest part among unrefinable ones.
/// Errors: EmptyUniverse when no proper unrefinable partition of N exists.
std::vector<DistinctPartition> maximal_unrefinable(Part N, SearchMode mode = SearchMode::Auto,
                                                   int jobs = 1);

/// Keeps the inputs with missing-part count floor(lambda_t / 2). All inputs
/// must share the same largest part.
std::vector<DistinctPartition> max_missing_subfamily(const std::vector<DistinctPartition>& mup);

/// maximal_unrefinable then max_missing_subfamily.
std::vector<DistinctPartition> max_missing_ubar(Part N, SearchMode mode = SearchMode::Auto,
                                                int jobs = 1);

enum class ExceptionalKind { Pi, Sigma, Tau, Zeta };

struct ExceptionalPartition {
  ExceptionalKind kind;
  Part n = 0;
  std::optional<Part> k;
  DistinctPartition partition;
};

/// Literal patterns of the exceptional family:
///   pi:    (1,...,n-3, n+1, 2n-4)           weight T_n
///   sigma: (1,...,n-2, 2n-4)                weight T_n - 3
///   tau:   (1,...,n-2, 2n-5)                weight T_n - 4
///   zeta:  (1,...,n-k-3, n-k-1,...,n-3, n-2+k, 2n-4)  weight T_n - (n-2k+1)
/// Errors: PatternCollision when the laid-out parts would repeat or decrease.
ExceptionalPartition exceptional(ExceptionalKind kind, Part n, std::optional<Part> k = {});

const char* exceptional_kind_name(ExceptionalKind k);

}  // namespace unref

#pragma once

#include "maximal.hpp"

namespace unref {

enum class CaseKind { Triangular, NT5, NT4 };

const char* case_name(CaseKind c);

/// One instance of the three correspondences:
///   Triangular: Ubar(T_n)         <-> D_k,         n = 2k-1, largest part 2n-4
///   NT5:        Ubar(T_{n,n-2k})  <-> D^o_{2k+2},  largest part 2n-5
///   NT4:        Ubar(T_{n,n-2k+1}) <-> D_k,        largest part 2n-4
struct BijectionCase {
  CaseKind kind = CaseKind::Triangular;
  Part n = 0;
  Part k = 0;

  Part d() const;
  Part weight() const { return triangular_number(n) - d(); }
  Part lambda_t() const { return kind == CaseKind::NT5 ? 2 * n - 5 : 2 * n - 4; }
  Part eta_weight() const { return kind == CaseKind::NT5 ? 2 * k + 2 : k; }
  Parity eta_parity() const { return kind == CaseKind::NT5 ? Parity::OddOnly : Parity::Any; }

  /// Target-family elements the backward construction must skip. Empty when
  /// the pattern degenerates (e.g. triangular k = 6, where (3, k-3) is not a
  /// distinct pair).
  std::vector<DistinctPartition> excluded_eta() const;

  static BijectionCase triangular(Part n);
  static BijectionCase nt5(Part n, Part k);
  static BijectionCase nt4(Part n, Part k);

  bool operator==(const BijectionCase&) const = default;
};

/// Decide the applicable case from (n, d) and the largest part.
/// Unclassifiable for even triangular weights and for d in {1, 2}.
BijectionCase classify(const DistinctPartition& lambda);

struct EtaPartition {
  DistinctPartition partition;
  bool improper = false;  // single part: the zeta image (k)
};

/// Triangular/NT4: ascending extra-column hooks; NT5: ascending diagonal
/// hooks from row 2. ShapeMismatch when the diagram lacks the expected shape.
EtaPartition forward(const DistinctPartition& lambda, const BijectionCase& bcase);

/// Complementation recipe, then the construction's diagonal and arm/leg
/// conditions, weight and unrefinability are asserted on the result.
/// Errors: ExcludedEta, ConstraintViolation.
DistinctPartition backward(const DistinctPartition& eta, const BijectionCase& bcase);

/// The same recipe with no post-assertions; used to demonstrate exclusions.
DistinctPartition backward_raw(const DistinctPartition& eta, const BijectionCase& bcase);

/// Proper members of the case's target family (D_k or D^o_{2k+2}), ascending.
std::vector<DistinctPartition> target_family(const BijectionCase& bcase);

struct ExclusionFinding {
  DistinctPartition eta;
  DistinctPartition lambda;
  std::vector<OffendingCell> offending;  // geometric-criterion violations
  bool definitional_refinable = false;
};

/// Runs the raw construction on each excluded eta and reports why the result
/// fails the unrefinability criterion. InvalidArgument when the case excludes
/// nothing.
std::vector<ExclusionFinding> demonstrate_exclusion(const BijectionCase& bcase);

struct BijectionCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct BijectionVerifyReport {
  BijectionCase bcase;
  std::size_t mup_size = 0;
  std::size_t ubar_size = 0;
  std::size_t family_size = 0;
  std::size_t excluded_size = 0;
  std::size_t improper_images = 0;
  std::size_t expected_mup = 0;
  std::vector<BijectionCheck> checks;
  bool pass() const;
};

/// Brute-forces Ubar, maps it forward and checks image membership,
/// injectivity, surjectivity, both roundtrips and the counting identity with
/// the exceptional-partition accounting.
BijectionVerifyReport verify_bijection(const BijectionCase& bcase,
                                       SearchMode mode = SearchMode::Auto, int jobs = 1);

/// Every admissible case with weight <= max_weight, smallest n first.
std::vector<BijectionCase> bijection_instances(Part max_weight, Part min_n = 6);

}  // namespace unref

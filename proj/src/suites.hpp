#pragma once

#include "bfile.hpp"
#include "emit.hpp"

namespace unref {

struct SuiteParams {
  std::optional<Part> max_weight;  // per-suite default when unset
  Part min_n = 6;
  Part max_n = 15;
  Part max_frobenius = 20;       // KN roundtrips, closure checks
  Part max_cells = 20;           // diagram-side roundtrips
  Part max_frobenius_hook = 16;  // closure <-> hook-criterion equivalence
  SearchMode mode = SearchMode::Auto;
  int jobs = 0;  // 0 = resolve from UNREF_JOBS / hardware
};

struct FailureRecord {
  std::string check;
  std::string input;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<FailureRecord> failures;
  double wall_seconds = 0.0;
  ordered_json params;
  bool pass() const { return failures.empty(); }
  ordered_json to_json() const;  // stable payload, no wall time
  std::string to_text() const;   // human-readable, includes wall time
};

/// name: counts | equivalence | roundtrips | structure | exceptions.
/// Errors: UnknownSuite.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

/// Compares the unrefinable-partition counts with the entries of a b-file.
/// An entry matching the count that admits single-part partitions instead of
/// the proper convention is accepted and annotated, not failed.
VerificationReport oeis_check(const BFile& bfile, Part max_index, int jobs = 0);

}  // namespace unref

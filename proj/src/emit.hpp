#pragma once

#include <json.hpp>

#include "bijection.hpp"

namespace unref {

using ordered_json = nlohmann::ordered_json;

/// The partition record used by every CLI subcommand:
/// {"parts":[...ascending], "weight":N, "n":n, "d":d}
ordered_json partition_record(const DistinctPartition& p);

std::string csv_header();
std::string csv_row(const DistinctPartition& p, bool unrefinable, bool maximal);
std::string text_row(const DistinctPartition& p, bool unrefinable, bool maximal);

ordered_json verdict_json(const DistinctPartition& p, const std::string& method,
                          const RefinabilityVerdict& def,
                          const RefinabilityVerdict& geo, bool ran_def, bool ran_geo);

ordered_json eta_json(const EtaPartition& eta);
ordered_json case_json(const BijectionCase& bcase);
ordered_json bijection_verify_json(const BijectionVerifyReport& report);
std::string bijection_verify_text(const BijectionVerifyReport& report);
ordered_json exclusion_json(const BijectionCase& bcase,
                            const std::vector<ExclusionFinding>& findings);

std::string join_parts(const DistinctPartition& p);

}  // namespace unref

#include "emit.hpp"

#include <iomanip>
#include <sstream>

namespace unref {

std::string join_parts(const DistinctPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

ordered_json partition_record(const DistinctPartition& p) {
  const auto dec = triangular_decompose(p.weight());
  ordered_json j;
  j["parts"] = p.parts();
  j["weight"] = p.weight();
  j["n"] = dec.n;
  j["d"] = dec.d;
  return j;
}

std::string csv_header() {
  return "parts;weight;n;d;lambda_t;missing_count;unrefinable;maximal";
}

std::string csv_row(const DistinctPartition& p, bool unrefinable, bool maximal) {
  const auto dec = triangular_decompose(p.weight());
  std::ostringstream os;
  os << join_parts(p) << ';' << p.weight() << ';' << dec.n << ';' << dec.d << ';'
     << p.largest() << ';' << p.missing_count() << ';' << (unrefinable ? "true" : "false")
     << ';' << (maximal ? "true" : "false");
  return os.str();
}

std::string text_row(const DistinctPartition& p, bool unrefinable, bool maximal) {
  const auto dec = triangular_decompose(p.weight());
  std::ostringstream os;
  os << std::left << std::setw(40) << ('(' + join_parts(p) + ')') << " weight=" << p.weight()
     << " n=" << dec.n << " d=" << dec.d << " lambda_t=" << p.largest()
     << " missing=" << p.missing_count() << " unrefinable=" << (unrefinable ? "yes" : "no")
     << " maximal=" << (maximal ? "yes" : "no");
  return os.str();
}

ordered_json verdict_json(const DistinctPartition& p, const std::string& method,
                          const RefinabilityVerdict& def,
                          const RefinabilityVerdict& geo, bool ran_def, bool ran_geo) {
  ordered_json j;
  j["partition"] = partition_record(p);
  j["method"] = method;
  j["unrefinable"] = ran_def ? def.unrefinable : geo.unrefinable;
  if (ran_def) {
    if (def.witness) {
      j["witness"] = {{"mu_i", def.witness->mu_i},
                      {"mu_j", def.witness->mu_j},
                      {"part", def.witness->part}};
    } else {
      j["witness"] = nullptr;
    }
  }
  if (ran_geo) {
    if (geo.offending) {
      ordered_json cells = ordered_json::array();
      for (const auto& c : *geo.offending)
        cells.push_back({{"row", c.row}, {"col", c.col}, {"hook", c.hook}});
      j["offending_hooks"] = cells;
    } else {
      j["offending_hooks"] = nullptr;
    }
  }
  if (ran_def && ran_geo) j["agree"] = def.unrefinable == geo.unrefinable;
  return j;
}

ordered_json eta_json(const EtaPartition& eta) {
  ordered_json j;
  j["parts"] = eta.partition.parts();
  j["weight"] = eta.partition.weight();
  j["improper"] = eta.improper;
  return j;
}

ordered_json case_json(const BijectionCase& bcase) {
  ordered_json j;
  j["case"] = case_name(bcase.kind);
  j["n"] = bcase.n;
  j["k"] = bcase.k;
  j["d"] = bcase.d();
  j["weight"] = bcase.weight();
  j["lambda_t"] = bcase.lambda_t();
  j["eta_weight"] = bcase.eta_weight();
  return j;
}

ordered_json bijection_verify_json(const BijectionVerifyReport& report) {
  ordered_json j = case_json(report.bcase);
  j["mup_size"] = report.mup_size;
  j["ubar_size"] = report.ubar_size;
  j["family_size"] = report.family_size;
  j["excluded_size"] = report.excluded_size;
  j["improper_images"] = report.improper_images;
  j["expected_mup"] = report.expected_mup;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["pass"] = report.pass();
  return j;
}

std::string bijection_verify_text(const BijectionVerifyReport& report) {
  std::ostringstream os;
  os << "bijection " << case_name(report.bcase.kind) << " n=" << report.bcase.n
     << " k=" << report.bcase.k << " weight=" << report.bcase.weight() << ": "
     << (report.pass() ? "PASS" : "FAIL") << " (mup=" << report.mup_size
     << " ubar=" << report.ubar_size << " family=" << report.family_size
     << " excluded=" << report.excluded_size << " improper=" << report.improper_images
     << ")\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  return os.str();
}

ordered_json exclusion_json(const BijectionCase& bcase,
                            const std::vector<ExclusionFinding>& findings) {
  ordered_json j = case_json(bcase);
  ordered_json arr = ordered_json::array();
  for (const auto& f : findings) {
    ordered_json fj;
    fj["eta"] = f.eta.parts();
    fj["partition"] = partition_record(f.lambda);
    ordered_json cells = ordered_json::array();
    for (const auto& c : f.offending)
      cells.push_back({{"row", c.row}, {"col", c.col}, {"hook", c.hook}});
    fj["offending_hooks"] = cells;
    fj["definitional_refinable"] = f.definitional_refinable;
    fj["excluded_for_cause"] = f.definitional_refinable && !f.offending.empty();
    arr.push_back(fj);
  }
  j["findings"] = arr;
  return j;
}

}  // namespace unref

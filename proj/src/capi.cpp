#include "unref/unref.h"

#include <cstring>

#include "parallel.hpp"
#include "suites.hpp"

using namespace unref;

struct unref_partition {
  DistinctPartition value;
};
struct unref_numset {
  NumericalSet value;
};
struct unref_diagram {
  YoungDiagram value;
};

namespace {

thread_local std::string g_last_error;

unref_status map_status(Status s) {
  switch (s) {
    case Status::Ok: return UNREF_OK;
    case Status::Empty: return UNREF_ERR_EMPTY;
    case Status::NonPositivePart: return UNREF_ERR_NONPOSITIVE_PART;
    case Status::DuplicatePart: return UNREF_ERR_DUPLICATE_PART;
    case Status::NoGaps: return UNREF_ERR_NO_GAPS;
    case Status::NoZColumn: return UNREF_ERR_NO_Z_COLUMN;
    case Status::OutOfRange: return UNREF_ERR_OUT_OF_RANGE;
    case Status::EmptyUniverse: return UNREF_ERR_EMPTY_UNIVERSE;
    case Status::PatternCollision: return UNREF_ERR_PATTERN_COLLISION;
    case Status::ExcludedEta: return UNREF_ERR_EXCLUDED_ETA;
    case Status::ConstraintViolation: return UNREF_ERR_CONSTRAINT_VIOLATION;
    case Status::ShapeMismatch: return UNREF_ERR_SHAPE_MISMATCH;
    case Status::Unclassifiable: return UNREF_ERR_UNCLASSIFIABLE;
    case Status::UnknownSuite: return UNREF_ERR_UNKNOWN_SUITE;
    case Status::MalformedLine: return UNREF_ERR_MALFORMED_LINE;
    case Status::IoFailure: return UNREF_ERR_IO;
    case Status::InvalidArgument: return UNREF_ERR_INVALID_ARGUMENT;
    case Status::VerificationFailure: return UNREF_ERR_VERIFICATION;
  }
  return UNREF_ERR_INTERNAL;
}

template <class F>
unref_status guarded(F&& f) noexcept {
  try {
    return f();
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_status(e.status());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UNREF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return UNREF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

unref_status require(bool cond, const char* message) {
  if (cond) return UNREF_OK;
  g_last_error = message;
  return UNREF_ERR_INVALID_ARGUMENT;
}

unref_status fill_buffer(const std::vector<Part>& values, int64_t* buffer, size_t capacity,
                         size_t* count) {
  if (count) *count = values.size();
  if (buffer) {
    const size_t n = std::min(capacity, values.size());
    for (size_t i = 0; i < n; ++i) buffer[i] = values[i];
  }
  return UNREF_OK;
}

CaseKind parse_case(const char* name) {
  const std::string s = name ? name : "";
  if (s == "triangular") return CaseKind::Triangular;
  if (s == "nt5") return CaseKind::NT5;
  if (s == "nt4") return CaseKind::NT4;
  fail(Status::InvalidArgument, "unknown case '" + s + "'");
}

BijectionCase make_case(CaseKind kind, Part n, Part k) {
  switch (kind) {
    case CaseKind::Triangular: return BijectionCase::triangular(n);
    case CaseKind::NT5: return BijectionCase::nt5(n, k);
    case CaseKind::NT4: return BijectionCase::nt4(n, k);
  }
  fail(Status::InvalidArgument, "bad case");
}

SearchMode parse_mode(int mode) {
  switch (mode) {
    case 1: return SearchMode::Naive;
    case 2: return SearchMode::Optimized;
    default: return SearchMode::Auto;
  }
}

struct EnumPlan {
  PartFilter filter;
  bool unrefinable_only = false;
  bool maximal_only = false;
  bool max_missing_only = false;
  Part weight = 0;
  int jobs = 1;
  Part max_lambda_t = 0;  // resolved only when needed
};

EnumPlan plan_enumeration(const unref_enum_options& o) {
  if (o.weight < 1) fail(Status::InvalidArgument, "weight must be positive");
  EnumPlan plan;
  plan.weight = o.weight;
  plan.filter.min_parts = std::max(o.min_parts, (o.unrefinable_only || o.maximal_only ||
                                                 o.max_missing_only)
                                                    ? 2
                                                    : 1);
  if (plan.filter.min_parts < 1) plan.filter.min_parts = 1;
  if (o.max_part > 0) plan.filter.max_part = o.max_part;
  plan.filter.parity = o.parity == 1   ? Parity::OddOnly
                       : o.parity == 2 ? Parity::EvenOnly
                                       : Parity::Any;
  plan.unrefinable_only = o.unrefinable_only != 0;
  plan.maximal_only = o.maximal_only != 0;
  plan.max_missing_only = o.max_missing_only != 0;
  plan.jobs = resolve_jobs(o.jobs);
  if (plan.maximal_only || plan.max_missing_only) {
    Part best = 0;
    std::vector<char> scratch;
    enumerate_distinct(o.weight, PartFilter{2, std::nullopt, Parity::Any},
                       [&](std::span<const Part> parts) {
                         if (quick_unrefinable(parts, scratch))
                           best = std::max(best, parts.back());
                         return true;
                       });
    plan.max_lambda_t = best;
  }
  return plan;
}

template <class Row>
void run_enumeration(const EnumPlan& plan, const Row& row) {
  std::vector<char> scratch;
  enumerate_distinct(plan.weight, plan.filter, [&](std::span<const Part> parts) {
    const bool unrefinable =
        parts.size() >= 2 ? quick_unrefinable(parts, scratch) : false;
    if (plan.unrefinable_only && !unrefinable) return true;
    const bool maximal = unrefinable && parts.back() == plan.max_lambda_t;
    if (plan.maximal_only && !maximal) return true;
    if (plan.max_missing_only) {
      const Part missing = parts.back() - static_cast<Part>(parts.size());
      if (!maximal || missing != parts.back() / 2) return true;
    }
    return row(parts, unrefinable, maximal);
  });
}

}  // namespace

extern "C" {

const char* unref_status_name(unref_status status) {
  switch (status) {
    case UNREF_OK: return "ok";
    case UNREF_ERR_EMPTY: return "empty";
    case UNREF_ERR_NONPOSITIVE_PART: return "nonpositive-part";
    case UNREF_ERR_DUPLICATE_PART: return "duplicate-part";
    case UNREF_ERR_NO_GAPS: return "no-gaps";
    case UNREF_ERR_NO_Z_COLUMN: return "no-z-column";
    case UNREF_ERR_OUT_OF_RANGE: return "out-of-range";
    case UNREF_ERR_EMPTY_UNIVERSE: return "empty-universe";
    case UNREF_ERR_PATTERN_COLLISION: return "pattern-collision";
    case UNREF_ERR_EXCLUDED_ETA: return "excluded-eta";
    case UNREF_ERR_CONSTRAINT_VIOLATION: return "constraint-violation";
    case UNREF_ERR_SHAPE_MISMATCH: return "shape-mismatch";
    case UNREF_ERR_UNCLASSIFIABLE: return "unclassifiable";
    case UNREF_ERR_UNKNOWN_SUITE: return "unknown-suite";
    case UNREF_ERR_MALFORMED_LINE: return "malformed-line";
    case UNREF_ERR_IO: return "io-failure";
    case UNREF_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case UNREF_ERR_VERIFICATION: return "verification-failure";
    case UNREF_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* unref_last_error_message(void) { return g_last_error.c_str(); }

void unref_string_free(char* s) { std::free(s); }

const char* unref_version(void) { return "1.0.0"; }

unref_status unref_partition_create(const int64_t* values, size_t count,
                                    unref_partition** out) {
  return guarded([&] {
    unref_status rc = require(values != nullptr || count == 0, "values is null");
    if (rc != UNREF_OK) return rc;
    rc = require(out != nullptr, "out is null");
    if (rc != UNREF_OK) return rc;
    *out = new unref_partition{DistinctPartition::make({values, values + count})};
    return UNREF_OK;
  });
}

void unref_partition_free(unref_partition* p) { delete p; }

size_t unref_partition_size(const unref_partition* p) {
  return static_cast<size_t>(p->value.size());
}

int64_t unref_partition_part(const unref_partition* p, size_t index) {
  return index < p->value.parts().size() ? p->value.parts()[index] : 0;
}

int64_t unref_partition_weight(const unref_partition* p) { return p->value.weight(); }

int64_t unref_partition_largest(const unref_partition* p) { return p->value.largest(); }

int unref_partition_is_proper(const unref_partition* p) {
  return p->value.is_proper() ? 1 : 0;
}

unref_status unref_partition_missing(const unref_partition* p, int64_t* buffer,
                                     size_t capacity, size_t* count) {
  return guarded([&] { return fill_buffer(p->value.missing_parts(), buffer, capacity, count); });
}

unref_status unref_partition_to_json(const unref_partition* p, char** json) {
  return guarded([&] {
    unref_status rc = require(json != nullptr, "json is null");
    if (rc != UNREF_OK) return rc;
    *json = dup_string(partition_record(p->value).dump());
    return UNREF_OK;
  });
}

unref_status unref_triangular_decompose(int64_t weight, int64_t* n, int64_t* d) {
  return guarded([&] {
    const auto dec = triangular_decompose(weight);
    if (n) *n = dec.n;
    if (d) *d = dec.d;
    return UNREF_OK;
  });
}

unref_status unref_enumerate(const unref_enum_options* options, unref_partition_visit visit,
                             void* user) {
  return guarded([&] {
    unref_status rc = require(options && visit, "options/visit is null");
    if (rc != UNREF_OK) return rc;
    const EnumPlan plan = plan_enumeration(*options);
    run_enumeration(plan, [&](std::span<const Part> parts, bool, bool) {
      unref_partition handle{DistinctPartition::make({parts.begin(), parts.end()})};
      return visit(user, &handle) == 0;
    });
    return UNREF_OK;
  });
}

unref_status unref_enumerate_lines(const unref_enum_options* options, const char* format,
                                   unref_line_visit visit, void* user) {
  return guarded([&] {
    unref_status rc = require(options && visit && format, "options/format/visit is null");
    if (rc != UNREF_OK) return rc;
    const std::string fmt = format;
    if (fmt != "json" && fmt != "csv" && fmt != "text")
      fail(Status::InvalidArgument, "format must be json, csv or text");
    const EnumPlan plan = plan_enumeration(*options);
    if (fmt == "csv" && visit(user, csv_header().c_str()) != 0) return UNREF_OK;
    run_enumeration(plan, [&](std::span<const Part> parts, bool unrefinable, bool maximal) {
      const auto p = DistinctPartition::make({parts.begin(), parts.end()});
      std::string line;
      if (fmt == "json")
        line = partition_record(p).dump();
      else if (fmt == "csv")
        line = csv_row(p, unrefinable, maximal);
      else
        line = text_row(p, unrefinable, maximal);
      return visit(user, line.c_str()) == 0;
    });
    return UNREF_OK;
  });
}

unref_status unref_numset_from_partition(const unref_partition* p, unref_numset** out) {
  return guarded([&] {
    *out = new unref_numset{NumericalSet::from_partition(p->value)};
    return UNREF_OK;
  });
}

unref_status unref_numset_parse(const char* text, unref_numset** out) {
  return guarded([&] {
    unref_status rc = require(text && out, "text/out is null");
    if (rc != UNREF_OK) return rc;
    *out = new unref_numset{NumericalSet::parse(text)};
    return UNREF_OK;
  });
}

void unref_numset_free(unref_numset* s) { delete s; }

unref_status unref_numset_format(const unref_numset* s, char** text) {
  return guarded([&] {
    *text = dup_string(s->value.format());
    return UNREF_OK;
  });
}

int64_t unref_numset_frobenius(const unref_numset* s) { return s->value.frobenius(); }
int64_t unref_numset_genus(const unref_numset* s) { return s->value.genus(); }
int64_t unref_numset_multiplicity(const unref_numset* s) { return s->value.multiplicity(); }

unref_status unref_numset_gaps(const unref_numset* s, int64_t* buffer, size_t capacity,
                               size_t* count) {
  return guarded([&] { return fill_buffer(s->value.gaps(), buffer, capacity, count); });
}

unref_status unref_numset_small_elements(const unref_numset* s, int64_t bound,
                                         int64_t* buffer, size_t capacity, size_t* count) {
  return guarded(
      [&] { return fill_buffer(s->value.small_elements(bound), buffer, capacity, count); });
}

unref_status unref_numset_is_semigroup(const unref_numset* s, int* closed,
                                       int64_t* witness_a, int64_t* witness_b) {
  return guarded([&] {
    const auto result = s->value.closure();
    if (closed) *closed = result.closed ? 1 : 0;
    if (witness_a) *witness_a = result.witness_a;
    if (witness_b) *witness_b = result.witness_b;
    return UNREF_OK;
  });
}

unref_status unref_diagram_create(const int64_t* rows, size_t count, unref_diagram** out) {
  return guarded([&] {
    unref_status rc = require(rows && out, "rows/out is null");
    if (rc != UNREF_OK) return rc;
    *out = new unref_diagram{YoungDiagram::from_rows({rows, rows + count})};
    return UNREF_OK;
  });
}

unref_status unref_kn_transform(const unref_numset* s, unref_diagram** out) {
  return guarded([&] {
    *out = new unref_diagram{kn_transform(s->value)};
    return UNREF_OK;
  });
}

unref_status unref_kn_inverse(const unref_diagram* y, unref_numset** out) {
  return guarded([&] {
    *out = new unref_numset{kn_inverse(y->value)};
    return UNREF_OK;
  });
}

void unref_diagram_free(unref_diagram* y) { delete y; }

size_t unref_diagram_row_count(const unref_diagram* y) {
  return static_cast<size_t>(y->value.row_count());
}

int64_t unref_diagram_row(const unref_diagram* y, size_t index) {
  return index < y->value.rows().size() ? y->value.rows()[index] : 0;
}

int64_t unref_diagram_cell_count(const unref_diagram* y) { return y->value.cell_count(); }

int64_t unref_diagram_hook(const unref_diagram* y, int64_t i, int64_t j) {
  if (!y->value.has_cell(static_cast<int>(i), j)) return 0;
  return hook_grid(y->value).at(static_cast<int>(i), j);
}

unref_status unref_diagram_conjugate(const unref_diagram* y, unref_diagram** out) {
  return guarded([&] {
    *out = new unref_diagram{y->value.conjugate()};
    return UNREF_OK;
  });
}

int unref_diagram_is_self_conjugate(const unref_diagram* y) {
  return y->value.is_self_conjugate() ? 1 : 0;
}

unref_status unref_diagram_render(const unref_diagram* y, int hooks_mode,
                                  const char* format, char** text) {
  return guarded([&] {
    unref_status rc = require(format && text, "format/text is null");
    if (rc != UNREF_OK) return rc;
    const std::string fmt = format;
    if (fmt != "ascii" && fmt != "svg")
      fail(Status::InvalidArgument, "format must be ascii or svg");
    *text = dup_string(render(y->value, hooks_mode ? RenderMode::Hooks : RenderMode::Cells,
                              fmt == "svg" ? RenderFormat::Svg : RenderFormat::Ascii));
    return UNREF_OK;
  });
}

unref_status unref_check(const unref_partition* p, const char* method, char** json) {
  return guarded([&] {
    unref_status rc = require(json != nullptr, "json is null");
    if (rc != UNREF_OK) return rc;
    const std::string m = method ? method : "both";
    if (m != "def" && m != "geo" && m != "both")
      fail(Status::InvalidArgument, "method must be def, geo or both");
    const bool run_def = m != "geo";
    const bool run_geo = m != "def";
    RefinabilityVerdict def, geo;
    if (run_def) def = is_unrefinable_definitional(p->value);
    if (run_geo) geo = is_unrefinable_geometric(p->value);
    *json = dup_string(verdict_json(p->value, m, def, geo, run_def, run_geo).dump());
    return UNREF_OK;
  });
}

int unref_is_unrefinable(const unref_partition* p) {
  std::vector<char> scratch;
  return quick_unrefinable(p->value.parts(), scratch) ? 1 : 0;
}

unref_status unref_lambda_t_bound(int64_t n, int64_t d, int64_t* bound, char** regime) {
  return guarded([&] {
    const auto spec = lambda_t_bound(n, d);
    if (bound) *bound = spec.bound;
    if (regime) *regime = dup_string(regime_name(spec.regime));
    return UNREF_OK;
  });
}

unref_status unref_exceptional(const char* kind, int64_t n, int64_t k,
                               unref_partition** out) {
  return guarded([&] {
    unref_status rc = require(kind && out, "kind/out is null");
    if (rc != UNREF_OK) return rc;
    const std::string name = kind;
    ExceptionalKind ek;
    if (name == "pi") ek = ExceptionalKind::Pi;
    else if (name == "sigma") ek = ExceptionalKind::Sigma;
    else if (name == "tau") ek = ExceptionalKind::Tau;
    else if (name == "zeta") ek = ExceptionalKind::Zeta;
    else fail(Status::InvalidArgument, "kind must be pi, sigma, tau or zeta");
    std::optional<Part> kk;
    if (ek == ExceptionalKind::Zeta) kk = k;
    *out = new unref_partition{exceptional(ek, n, kk).partition};
    return UNREF_OK;
  });
}

unref_status unref_bijection_forward(const unref_partition* lambda, char** json) {
  return guarded([&] {
    unref_status rc = require(json != nullptr, "json is null");
    if (rc != UNREF_OK) return rc;
    const auto bcase = classify(lambda->value);
    const auto eta = forward(lambda->value, bcase);
    ordered_json j = case_json(bcase);
    j["partition"] = partition_record(lambda->value);
    j["eta"] = eta_json(eta);
    *json = dup_string(j.dump());
    return UNREF_OK;
  });
}

unref_status unref_bijection_backward(const int64_t* eta, size_t eta_count,
                                      const char* case_name_str, int64_t n,
                                      unref_partition** out) {
  return guarded([&] {
    unref_status rc = require(eta && out, "eta/out is null");
    if (rc != UNREF_OK) return rc;
    const CaseKind kind = parse_case(case_name_str);
    const auto eta_p = DistinctPartition::make({eta, eta + eta_count});
    Part k = 0;
    if (kind == CaseKind::NT5) {
      if (eta_p.weight() % 2 != 0 || eta_p.weight() < 4)
        fail(Status::ConstraintViolation, "nt5 eta weight must be even (2k+2)");
      k = (eta_p.weight() - 2) / 2;
    } else {
      k = eta_p.weight();
    }
    const auto bcase = make_case(kind, n, k);
    *out = new unref_partition{backward(eta_p, bcase)};
    return UNREF_OK;
  });
}

unref_status unref_bijection_verify(const char* case_name_str, int64_t n, int64_t k,
                                    int jobs, int as_text, char** report) {
  return guarded([&] {
    unref_status rc = require(report != nullptr, "report is null");
    if (rc != UNREF_OK) return rc;
    const auto bcase = make_case(parse_case(case_name_str), n, k);
    const auto result = verify_bijection(bcase, SearchMode::Auto, jobs);
    *report = dup_string(as_text ? bijection_verify_text(result)
                                 : bijection_verify_json(result).dump());
    return result.pass() ? UNREF_OK : UNREF_ERR_VERIFICATION;
  });
}

unref_status unref_bijection_exclusion(const char* case_name_str, int64_t n, int64_t k,
                                       char** json) {
  return guarded([&] {
    unref_status rc = require(json != nullptr, "json is null");
    if (rc != UNREF_OK) return rc;
    const auto bcase = make_case(parse_case(case_name_str), n, k);
    const auto findings = demonstrate_exclusion(bcase);
    *json = dup_string(exclusion_json(bcase, findings).dump());
    return UNREF_OK;
  });
}

unref_status unref_run_suite(const char* name, const unref_suite_params* params,
                             int as_text, char** report) {
  return guarded([&] {
    unref_status rc = require(name && report, "name/report is null");
    if (rc != UNREF_OK) return rc;
    SuiteParams sp;
    if (params) {
      if (params->max_weight > 0) sp.max_weight = params->max_weight;
      if (params->min_n > 0) sp.min_n = params->min_n;
      if (params->max_n > 0) sp.max_n = params->max_n;
      sp.mode = parse_mode(params->mode);
      sp.jobs = params->jobs;
    }
    const auto result = run_suite(name, sp);
    *report = dup_string(as_text ? result.to_text() : result.to_json().dump());
    return result.pass() ? UNREF_OK : UNREF_ERR_VERIFICATION;
  });
}

unref_status unref_oeis_check(const char* bfile_path, int64_t max_index, int jobs,
                              int as_text, char** report) {
  return guarded([&] {
    unref_status rc = require(bfile_path && report, "path/report is null");
    if (rc != UNREF_OK) return rc;
    const auto bfile = load_bfile(bfile_path);
    const auto result = oeis_check(bfile, max_index, jobs);
    *report = dup_string(as_text ? result.to_text() : result.to_json().dump());
    return result.pass() ? UNREF_OK : UNREF_ERR_VERIFICATION;
  });
}

}  // extern "C"

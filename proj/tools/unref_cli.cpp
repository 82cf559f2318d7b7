// Command-line front end for the unref shared library. Talks to the C API
// only; all domain logic lives behind it.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unref/unref.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_code_for(unref_status status) {
  switch (status) {
    case UNREF_OK: return kExitOk;
    case UNREF_ERR_VERIFICATION: return kExitVerificationFailure;
    case UNREF_ERR_IO:
    case UNREF_ERR_MALFORMED_LINE: return kExitIo;
    default: return kExitUsage;
  }
}

int report_error(unref_status status) {
  std::cerr << "error (" << unref_status_name(status) << "): " << unref_last_error_message()
            << '\n';
  return exit_code_for(status);
}

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw CLI::ValidationError("empty entry in integer list");
    try {
      out.push_back(std::stoll(token));
    } catch (const std::exception&) {
      throw CLI::ValidationError("bad integer '" + token + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("empty integer list");
  return out;
}

struct OwnedString {
  char* data = nullptr;
  ~OwnedString() { unref_string_free(data); }
  const char* view() const { return data ? data : ""; }
};

struct OwnedPartition {
  unref_partition* handle = nullptr;
  ~OwnedPartition() { unref_partition_free(handle); }
};

struct OwnedNumset {
  unref_numset* handle = nullptr;
  ~OwnedNumset() { unref_numset_free(handle); }
};

struct OwnedDiagram {
  unref_diagram* handle = nullptr;
  ~OwnedDiagram() { unref_diagram_free(handle); }
};

int print_line_cb(void*, const char* line) {
  std::cout << line << '\n';
  return 0;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error (io-failure): cannot write " << out_path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unrefinable partitions, numerical sets and Young diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (default: UNREF_JOBS or hardware)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream distinct-part partitions");
  int64_t weight = 0;
  bool unrefinable_only = false, maximal_only = false, max_missing_only = false;
  int min_parts = 1;
  int64_t max_part = 0;
  std::string parity = "all";
  bool as_json = false, as_csv = false;
  enumerate->add_option("--weight", weight, "weight to enumerate")->required();
  enumerate->add_flag("--unrefinable", unrefinable_only, "keep unrefinable partitions");
  enumerate->add_flag("--maximal", maximal_only, "keep maximal unrefinable partitions");
  enumerate->add_flag("--max-missing", max_missing_only,
                      "keep those attaining the missing-parts bound");
  enumerate->add_option("--min-parts", min_parts, "minimal part count");
  enumerate->add_option("--max-part", max_part, "cap on the largest part");
  enumerate->add_option("--parity", parity, "all | odd | even");
  enumerate->add_flag("--json", as_json, "one JSON object per line");
  enumerate->add_flag("--csv", as_csv, "semicolon-separated rows");

  // check
  auto* check = app.add_subcommand("check", "decide unrefinability");
  std::string partition_arg, method = "both";
  check->add_option("--partition", partition_arg, "comma-separated parts")->required();
  check->add_option("--method", method, "def | geo | both");

  // kn
  auto* kn = app.add_subcommand("kn", "Keith-Nath transformation");
  std::string set_arg, rows_arg;
  bool inverse = false;
  kn->add_option("--set", set_arg, "numerical set, e.g. 0,3,4,7,9,->");
  kn->add_option("--rows", rows_arg, "diagram rows, e.g. 4,3,3,1,1");
  kn->add_flag("--inverse", inverse, "map a diagram back to its numerical set");

  // render
  auto* render_cmd = app.add_subcommand("render", "draw a Young diagram");
  std::string render_partition, render_format = "ascii", out_path;
  bool hooks = false, cells = false;
  render_cmd->add_option("--partition", render_partition, "comma-separated parts")->required();
  render_cmd->add_flag("--hooks", hooks, "write hook lengths in the cells");
  render_cmd->add_flag("--cells", cells, "empty cells (default)");
  render_cmd->add_option("--format", render_format, "ascii | svg");
  render_cmd->add_option("--out", out_path, "write to a file instead of stdout");

  // bijection
  auto* bijection = app.add_subcommand("bijection", "the three correspondences");
  bijection->require_subcommand(1);
  auto* fwd = bijection->add_subcommand("forward", "partition -> eta");
  std::string fwd_partition;
  fwd->add_option("--partition", fwd_partition, "comma-separated parts")->required();
  auto* bwd = bijection->add_subcommand("backward", "eta -> partition");
  std::string eta_arg, case_arg;
  int64_t case_n = 0, case_k = 0;
  bwd->add_option("--eta", eta_arg, "comma-separated eta parts")->required();
  bwd->add_option("--case", case_arg, "triangular | nt5 | nt4")->required();
  bwd->add_option("--n", case_n, "case parameter n")->required();
  bool bwd_json = false;
  bwd->add_flag("--json", bwd_json, "JSON output");
  auto* verify_b = bijection->add_subcommand("verify", "brute-force one instance");
  verify_b->add_option("--case", case_arg, "triangular | nt5 | nt4")->required();
  verify_b->add_option("--n", case_n, "case parameter n")->required();
  verify_b->add_option("--k", case_k, "case parameter k (ignored for triangular)");
  bool verify_json = false;
  verify_b->add_flag("--json", verify_json, "JSON output");
  auto* exclusion = bijection->add_subcommand("exclusion", "why the excluded eta fails");
  exclusion->add_option("--case", case_arg, "triangular | nt5 | nt4")->required();
  exclusion->add_option("--n", case_n, "case parameter n")->required();
  exclusion->add_option("--k", case_k, "case parameter k (ignored for triangular)");

  // verify (suites)
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int64_t max_weight = 0, min_n = 0, max_n = 0;
  std::string mode = "auto";
  bool suite_json = false;
  verify->add_option("--suite", suite, "counts | equivalence | roundtrips | structure | exceptions")
      ->required();
  verify->add_option("--max-weight", max_weight, "weight cap");
  verify->add_option("--min-n", min_n, "smallest n");
  verify->add_option("--max-n", max_n, "largest n");
  verify->add_option("--mode", mode, "auto | naive | optimized");
  verify->add_flag("--json", suite_json, "JSON report");

  // oeis-check
  auto* oeis = app.add_subcommand("oeis-check", "compare counts against an OEIS b-file");
  std::string bfile_path;
  int64_t oeis_max = 40;
  bool oeis_json = false;
  oeis->add_option("--bfile", bfile_path, "path to the b-file")->required();
  oeis->add_option("--max", oeis_max, "largest index to check");
  oeis->add_flag("--json", oeis_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) {
      if (as_json && as_csv) {
        std::cerr << "error: --json and --csv are mutually exclusive\n";
        return kExitUsage;
      }
      unref_enum_options options{};
      options.weight = weight;
      options.min_parts = min_parts;
      options.max_part = max_part;
      options.parity = parity == "odd" ? 1 : parity == "even" ? 2 : 0;
      if (parity != "all" && parity != "odd" && parity != "even") {
        std::cerr << "error: --parity must be all, odd or even\n";
        return kExitUsage;
      }
      options.unrefinable_only = unrefinable_only ? 1 : 0;
      options.maximal_only = maximal_only ? 1 : 0;
      options.max_missing_only = max_missing_only ? 1 : 0;
      options.jobs = jobs;
      const char* format = as_json ? "json" : as_csv ? "csv" : "text";
      const unref_status rc = unref_enumerate_lines(&options, format, print_line_cb, nullptr);
      if (rc != UNREF_OK) return report_error(rc);
      return kExitOk;
    }

    if (*check) {
      const auto values = parse_int_list(partition_arg);
      OwnedPartition p;
      unref_status rc = unref_partition_create(values.data(), values.size(), &p.handle);
      if (rc != UNREF_OK) return report_error(rc);
      OwnedString json;
      rc = unref_check(p.handle, method.c_str(), &json.data);
      if (rc != UNREF_OK) return report_error(rc);
      std::cout << json.view() << '\n';
      return kExitOk;
    }

    if (*kn) {
      if (inverse) {
        if (rows_arg.empty()) {
          std::cerr << "error: kn --inverse needs --rows\n";
          return kExitUsage;
        }
        const auto rows = parse_int_list(rows_arg);
        OwnedDiagram y;
        unref_status rc = unref_diagram_create(rows.data(), rows.size(), &y.handle);
        if (rc != UNREF_OK) return report_error(rc);
        OwnedNumset s;
        rc = unref_kn_inverse(y.handle, &s.handle);
        if (rc != UNREF_OK) return report_error(rc);
        OwnedString text;
        rc = unref_numset_format(s.handle, &text.data);
        if (rc != UNREF_OK) return report_error(rc);
        std::cout << "{\"rows\":[";
        for (size_t i = 0; i < rows.size(); ++i) std::cout << (i ? "," : "") << rows[i];
        std::cout << "],\"set\":\"" << text.view() << "\"}\n";
        return kExitOk;
      }
      if (set_arg.empty()) {
        std::cerr << "error: kn needs --set (or --rows with --inverse)\n";
        return kExitUsage;
      }
      OwnedNumset s;
      unref_status rc = unref_numset_parse(set_arg.c_str(), &s.handle);
      if (rc != UNREF_OK) return report_error(rc);
      OwnedDiagram y;
      rc = unref_kn_transform(s.handle, &y.handle);
      if (rc != UNREF_OK) return report_error(rc);
      OwnedString canonical;
      rc = unref_numset_format(s.handle, &canonical.data);
      if (rc != UNREF_OK) return report_error(rc);
      std::cout << "{\"set\":\"" << canonical.view() << "\",\"rows\":[";
      for (size_t i = 0; i < unref_diagram_row_count(y.handle); ++i)
        std::cout << (i ? "," : "") << unref_diagram_row(y.handle, i);
      std::cout << "]}\n";
      return kExitOk;
    }

    if (*render_cmd) {
      const auto values = parse_int_list(render_partition);
      OwnedPartition p;
      unref_status rc = unref_partition_create(values.data(), values.size(), &p.handle);
      if (rc != UNREF_OK) return report_error(rc);
      OwnedNumset s;
      rc = unref_numset_from_partition(p.handle, &s.handle);
      if (rc != UNREF_OK) return report_error(rc);
      OwnedDiagram y;
      rc = unref_kn_transform(s.handle, &y.handle);
      if (rc != UNREF_OK) return report_error(rc);
      OwnedString text;
      rc = unref_diagram_render(y.handle, hooks && !cells ? 1 : 0, render_format.c_str(),
                                &text.data);
      if (rc != UNREF_OK) return report_error(rc);
      return write_output(text.view(), out_path);
    }

    if (*fwd) {
      const auto values = parse_int_list(fwd_partition);
      OwnedPartition p;
      unref_status rc = unref_partition_create(values.data(), values.size(), &p.handle);
      if (rc != UNREF_OK) return report_error(rc);
      OwnedString json;
      rc = unref_bijection_forward(p.handle, &json.data);
      if (rc != UNREF_OK) return report_error(rc);
      std::cout << json.view() << '\n';
      return kExitOk;
    }

    if (*bwd) {
      const auto eta = parse_int_list(eta_arg);
      OwnedPartition out;
      const unref_status rc = unref_bijection_backward(eta.data(), eta.size(),
                                                       case_arg.c_str(), case_n, &out.handle);
      if (rc != UNREF_OK) return report_error(rc);
      if (bwd_json) {
        OwnedString json;
        const unref_status jrc = unref_partition_to_json(out.handle, &json.data);
        if (jrc != UNREF_OK) return report_error(jrc);
        std::cout << json.view() << '\n';
      } else {
        for (size_t i = 0; i < unref_partition_size(out.handle); ++i)
          std::cout << (i ? "," : "") << unref_partition_part(out.handle, i);
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (*verify_b) {
      OwnedString out;
      const unref_status rc = unref_bijection_verify(case_arg.c_str(), case_n, case_k, jobs,
                                                     verify_json ? 0 : 1, &out.data);
      if (rc != UNREF_OK && rc != UNREF_ERR_VERIFICATION) return report_error(rc);
      std::cout << out.view();
      if (verify_json) std::cout << '\n';
      return exit_code_for(rc);
    }

    if (*exclusion) {
      OwnedString json;
      const unref_status rc =
          unref_bijection_exclusion(case_arg.c_str(), case_n, case_k, &json.data);
      if (rc != UNREF_OK) return report_error(rc);
      std::cout << json.view() << '\n';
      return kExitOk;
    }

    if (*verify) {
      unref_suite_params params{};
      params.max_weight = max_weight;
      params.min_n = min_n;
      params.max_n = max_n;
      params.mode = mode == "naive" ? 1 : mode == "optimized" ? 2 : 0;
      if (mode != "auto" && mode != "naive" && mode != "optimized") {
        std::cerr << "error: --mode must be auto, naive or optimized\n";
        return kExitUsage;
      }
      params.jobs = jobs;
      OwnedString report;
      const unref_status rc =
          unref_run_suite(suite.c_str(), &params, suite_json ? 0 : 1, &report.data);
      if (rc != UNREF_OK && rc != UNREF_ERR_VERIFICATION) return report_error(rc);
      std::cout << report.view();
      if (suite_json) std::cout << '\n';
      return exit_code_for(rc);
    }

    if (*oeis) {
      OwnedString report;
      const unref_status rc = unref_oeis_check(bfile_path.c_str(), oeis_max, jobs,
                                               oeis_json ? 0 : 1, &report.data);
      if (rc != UNREF_OK && rc != UNREF_ERR_VERIFICATION) return report_error(rc);
      std::cout << report.view();
      if (oeis_json) std::cout << '\n';
      return exit_code_for(rc);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

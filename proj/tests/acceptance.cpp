// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path arrives via --cli (used by the determinism
// criterion).

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "suites.hpp"

using namespace unref;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  std::cout << "criterion " << index << " (" << name << "): " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << '\n';
  std::cout.flush();
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string format_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << "s";
  return os.str();
}

DistinctPartition dp(std::vector<Part> parts) { return DistinctPartition::make(std::move(parts)); }

// ---------------------------------------------------------------- criterion 1

void criterion_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  SuiteParams params;
  params.max_weight = 60;
  params.jobs = 4;
  const auto suite = run_suite("equivalence", params);
  std::ostringstream detail;
  detail << "definitional vs geometric verdicts for all N <= 60, " << suite.instances
         << " weights, " << format_seconds(seconds_since(start)) << " with 4 workers";
  if (!suite.pass()) detail << "; first failure: " << suite.failures.front().got;
  report(1, "criterion equivalence", suite.pass(), detail.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion_kn_roundtrips() {
  const auto start = std::chrono::steady_clock::now();
  SuiteParams params;
  params.max_frobenius = 20;
  params.max_cells = 20;
  params.max_frobenius_hook = 16;
  params.jobs = 4;
  const auto suite = run_suite("roundtrips", params);
  std::ostringstream detail;
  detail << "exact roundtrips over " << suite.instances
         << " numerical sets (F <= 20) and diagrams (<= 20 cells), "
         << format_seconds(seconds_since(start));
  if (!suite.pass())
    detail << "; " << suite.failures.front().check << " @ " << suite.failures.front().input;
  report(2, "KN roundtrips", suite.pass(), detail.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion_paper_examples() {
  std::ostringstream detail;
  bool pass = true;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  };

  // (a) worked numerical set
  const auto sa = NumericalSet::parse("0,3,6,8,9,11,12,14,->");
  const auto ya = kn_transform(sa);
  expect(ya.rows() == std::vector<Part>{7, 5, 3, 2, 2, 1, 1}, "(a) rows");
  expect(hook_grid(ya).first_column() == std::vector<Part>{13, 10, 7, 5, 4, 2, 1},
         "(a) first-column hooks");

  // (b) doubling-clause cells and the non-semigroup witness
  const auto pb = dp({1, 2, 5, 6, 8});
  expect(is_unrefinable_definitional(pb).unrefinable &&
             is_unrefinable_geometric(pb).unrefinable,
         "(b) unrefinable");
  const auto yb = kn_transform(NumericalSet::from_partition(pb));
  const auto gb = hook_grid(yb);
  expect(gb.at(1, 3) == 4 && gb.at(1, 1) == 8 && !pb.contains(4), "(b) cell h=4 under head 8");
  expect(gb.at(2, 2) == 3 && gb.at(2, 1) == 6 && !pb.contains(3), "(b) cell h=3 under head 6");
  const auto closure = NumericalSet::from_partition(pb).closure();
  expect(!closure.closed && closure.witness_a == 3 && closure.witness_b == 3,
         "(b) witness 6=3+3");

  // (c) triangular forward/backward pair
  const auto lam_c = dp({1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 16, 17, 26});
  const auto case_c = BijectionCase::triangular(15);
  expect(forward(lam_c, case_c).partition == dp({1, 3, 4}), "(c) forward");
  expect(backward(dp({1, 3, 4}), case_c) == lam_c, "(c) backward");

  // (d) NT5 pair, self-conjugate diagram
  const auto lam_d = dp({1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 14, 15, 25});
  const auto case_d = BijectionCase::nt5(15, 3);
  expect(forward(lam_d, case_d).partition == dp({3, 5}), "(d) forward");
  expect(backward(dp({3, 5}), case_d) == lam_d, "(d) backward");
  expect(kn_transform(NumericalSet::from_partition(lam_d)).is_self_conjugate(),
         "(d) self-conjugate");

  // (e) zeta_{19,6}
  const auto zeta = exceptional(ExceptionalKind::Zeta, 19, 6).partition;
  expect(zeta == dp({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 23, 34}),
         "(e) literal pattern");
  expect(zeta.weight() == 182, "(e) weight");
  expect(is_unrefinable_definitional(zeta).unrefinable &&
             is_unrefinable_geometric(zeta).unrefinable,
         "(e) unrefinable");
  const auto img = forward(zeta, BijectionCase::nt4(19, 6));
  expect(img.improper && img.partition == dp({6}), "(e) improper image (6)");

  report(3, "paper examples bit-exact", pass,
         pass ? "(a)-(e) reproduce exactly" : detail.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion_counts() {
  bool pass = true;
  std::ostringstream detail;
  auto expect_count = [&](const std::string& label, Part got, Part expected) {
    if (got != expected) {
      pass = false;
      if (!detail.str().empty()) detail << "; ";
      detail << label << ": expected " << expected << ", got " << got;
    }
  };

  const auto run_path = [&](SearchMode mode, int jobs) {
    const char* tag = mode == SearchMode::Naive ? "exhaustive" : "optimized";
    const Part expected_odd[] = {1, 2, 3, 4, 5};
    int idx = 0;
    for (Part n : {7, 9, 11, 13, 15}) {
      expect_count(std::string(tag) + " |MUP(T_" + std::to_string(n) + ")| = |D_" +
                       std::to_string((n + 1) / 2) + "|",
                   static_cast<Part>(maximal_unrefinable(triangular_number(n), mode, jobs).size()),
                   expected_odd[idx++]);
    }
    for (Part n : {8, 10, 12}) {
      expect_count(std::string(tag) + " |MUP(T_" + std::to_string(n) + ")|",
                   static_cast<Part>(maximal_unrefinable(triangular_number(n), mode, jobs).size()),
                   1);
    }
    expect_count(std::string(tag) + " |MUP(T_{15,9})| = |D^o_8|",
                 static_cast<Part>(maximal_unrefinable(111, mode, jobs).size()), 2);
    expect_count(std::string(tag) + " |MUP(T_{15,8})| = 1 + |D_4|",
                 static_cast<Part>(maximal_unrefinable(112, mode, jobs).size()), 2);
  };

  // brute-force both sides: the distinct-part families by direct enumeration
  expect_count("|D^o_8| by enumeration",
               static_cast<Part>(
                   collect_distinct(8, PartFilter{2, std::nullopt, Parity::OddOnly}).size()),
               2);
  expect_count("|D_4| by enumeration",
               static_cast<Part>(
                   collect_distinct(4, PartFilter{2, std::nullopt, Parity::Any}).size()),
               1);
  const Part dk_sizes[] = {1, 2, 3, 4, 5};
  int idx = 0;
  for (Part k : {4, 5, 6, 7, 8}) {
    const Part got = static_cast<Part>(
        collect_distinct(k, PartFilter{2, std::nullopt, Parity::Any}).size());
    // |D_6| is 3: the point where the headline identity breaks
    if (k == 6) expect_count("|D_6| by enumeration", got, 3);
    else expect_count("|D_" + std::to_string(k) + "| by enumeration", got, dk_sizes[idx]);
    ++idx;
  }

  auto start = std::chrono::steady_clock::now();
  run_path(SearchMode::Naive, 4);
  const double naive_time = seconds_since(start);
  start = std::chrono::steady_clock::now();
  run_path(SearchMode::Optimized, 4);
  const double optimized_time = seconds_since(start);

  std::ostringstream full;
  full << (pass ? "all count identities hold" : detail.str()) << " [exhaustive "
       << format_seconds(naive_time) << ", optimized " << format_seconds(optimized_time)
       << "]";
  report(4, "count identities", pass, full.str());
}

// ---------------------------------------------------------------- criterion 5

void criterion_structure() {
  SuiteParams params;
  params.max_weight = 153;
  params.min_n = 6;
  const auto suite = run_suite("structure", params);
  std::ostringstream detail;
  detail << "cell counts, self-conjugacy, quasi-symmetry and doubling over "
         << suite.instances << " brute-forced elements up to weight 153";
  if (!suite.pass())
    detail << "; " << suite.failures.front().check << " @ " << suite.failures.front().input;
  report(5, "structural invariants", suite.pass(), detail.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion_bijection_roundtrips() {
  bool pass = true;
  std::ostringstream detail;
  std::size_t elements = 0;
  std::size_t instances = 0;
  for (const auto& bcase : bijection_instances(153, 6)) {
    ++instances;
    const auto report_b = verify_bijection(bcase, SearchMode::Auto, 4);
    elements += report_b.ubar_size;
    for (const auto& check : report_b.checks) {
      if (!check.pass) {
        pass = false;
        if (!detail.str().empty()) detail << "; ";
        detail << case_name(bcase.kind) << " n=" << bcase.n << " k=" << bcase.k << ": "
               << check.name;
      }
    }
  }
  std::ostringstream full;
  if (pass)
    full << "both roundtrips exact across " << instances << " instances / " << elements
         << " elements up to weight 153";
  else
    full << detail.str();
  report(6, "bijection roundtrips", pass, full.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion_exclusions() {
  bool pass = true;
  std::ostringstream detail;
  auto expect_finding = [&](const BijectionCase& bcase, const std::string& label) {
    for (const auto& finding : demonstrate_exclusion(bcase)) {
      if (!finding.definitional_refinable || finding.offending.empty()) {
        pass = false;
        if (!detail.str().empty()) detail << "; ";
        detail << label << " did not fail the criterion";
      }
    }
  };
  expect_finding(BijectionCase::triangular(15), "triangular eta=(3,5) at k=8");
  // raw construction there refines 18 = 8 + 10: the cells the figure flags
  const auto tri = demonstrate_exclusion(BijectionCase::triangular(15));
  if (!(tri.size() == 1 && tri[0].lambda == dp({1, 2, 3, 4, 5, 6, 7, 9, 11, 12, 16, 18, 26}) &&
        !tri[0].offending.empty() && tri[0].offending[0] == OffendingCell{2, 2, 10})) {
    pass = false;
    detail << (detail.str().empty() ? "" : "; ") << "triangular offending cells differ";
  }
  expect_finding(BijectionCase::nt5(10, 3), "nt5 eta=(1,7) at 2k=n-4 (n=10)");
  expect_finding(BijectionCase::nt5(12, 4), "nt5 eta=(1,9) at 2k=n-4 (n=12)");
  report(7, "exclusion demonstrations", pass,
         pass ? "excluded etas produce refinable constructions with offending hooks"
              : detail.str());
}

// ---------------------------------------------------------------- criterion 8

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  CliRun result;
  FILE* pipe = popen((cli + " " + args + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int rc = pclose(pipe);
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

void criterion_determinism(const std::string& cli) {
  bool pass = true;
  std::ostringstream detail;
  const std::string commands[] = {
      "enumerate --weight 66 --unrefinable --json",
      "enumerate --weight 52 --csv",
      "verify --suite equivalence --max-weight 40 --json",
      "verify --suite structure --max-weight 120 --json",
      "bijection verify --case nt5 --n 15 --k 3 --json",
  };
  for (const auto& command : commands) {
    const auto a = run_cli(cli, command + " --jobs 1");
    const auto b = run_cli(cli, command + " --jobs 1");
    const auto c = run_cli(cli, command + " --jobs 4");
    if (a.exit_code != 0 || a.output != b.output || a.output != c.output ||
        a.exit_code != b.exit_code || a.exit_code != c.exit_code) {
      pass = false;
      if (!detail.str().empty()) detail << "; ";
      detail << "'" << command << "' varies across runs";
    }
  }
  report(8, "determinism", pass,
         pass ? "byte-identical JSON/CSV across reruns and worker counts" : detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  if (cli.empty()) {
    std::cerr << "usage: acceptance --cli <path-to-cli>\n";
    return 2;
  }

  criterion_equivalence();
  criterion_kn_roundtrips();
  criterion_paper_examples();
  criterion_counts();
  criterion_structure();
  criterion_bijection_roundtrips();
  criterion_exclusions();
  criterion_determinism(cli);

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}

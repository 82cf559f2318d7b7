#include "suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "parallel.hpp"

namespace unref {

namespace {

std::string parts_str(const DistinctPartition& p) { return '(' + join_parts(p) + ')'; }

using Clock = std::chrono::steady_clock;

struct Stopwatch {
  Clock::time_point start = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

void counts_suite(VerificationReport& report, const SuiteParams& p, int jobs) {
  const Part cap = p.max_weight.value_or(kExhaustiveCap);
  auto check_count = [&](const std::string& input, Part got, Part expected) {
    ++report.instances;
    if (got != expected)
      report.failures.push_back(FailureRecord{"mup_count", input, std::to_string(expected),
                                              std::to_string(got)});
  };
  for (Part n = std::max<Part>(p.min_n, 6); n <= p.max_n; ++n) {
    const Part N = triangular_number(n);
    if (N > cap) break;
    const Part mup = static_cast<Part>(maximal_unrefinable(N, p.mode, jobs).size());
    if (n % 2 == 0) {
      check_count("T_" + std::to_string(n), mup, 1);
    } else {
      const Part dk = static_cast<Part>(
          collect_distinct((n + 1) / 2, PartFilter{2, std::nullopt, Parity::Any}).size());
      check_count("T_" + std::to_string(n), mup, dk);
    }
  }
  for (const auto& bcase : bijection_instances(cap, p.min_n)) {
    if (bcase.kind == CaseKind::Triangular || bcase.n > p.max_n) continue;
    const Part mup = static_cast<Part>(maximal_unrefinable(bcase.weight(), p.mode, jobs).size());
    const Part fam = static_cast<Part>(target_family(bcase).size());
    const Part expected = bcase.kind == CaseKind::NT5 ? fam : fam + 1;
    std::ostringstream in;
    in << case_name(bcase.kind) << " n=" << bcase.n << " k=" << bcase.k;
    check_count(in.str(), mup, expected);
  }
}

void equivalence_suite(VerificationReport& report, const SuiteParams& p, int jobs) {
  const Part cap = p.max_weight.value_or(60);
  for (Part N = 3; N <= cap; ++N) {
    ++report.instances;
    const auto result = verdicts_agree(N, jobs);
    if (!result.agree)
      report.failures.push_back(FailureRecord{
          "verdicts_agree", "N=" + std::to_string(N), "agreement",
          "divergence at " + parts_str(*result.divergence)});
  }
}

// All nonempty gap sets within [1..max_f], encoded as bitmasks (bit i <-> gap
// i+1). Failures are merged in chunk order so runs are deterministic.
template <class Fn>
void for_each_gap_set(Part max_f, int jobs, std::vector<FailureRecord>& failures,
                      std::size_t& instances, Fn per_set) {
  if (max_f < 1 || max_f > 30)
    fail(Status::InvalidArgument, "max Frobenius must lie in [1, 30]");
  const std::uint64_t total = (1ull << max_f) - 1;
  const int chunks = jobs * 8;
  std::vector<std::vector<FailureRecord>> chunk_failures(static_cast<std::size_t>(chunks));
  std::vector<std::thread> workers;
  std::atomic<std::uint64_t> done{0};
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (int c = w; c < chunks; c += jobs) {
        const std::uint64_t lo = 1 + total * c / chunks;
        const std::uint64_t hi = total * (c + 1) / chunks;
        if (hi < lo) continue;
        std::vector<Part> gaps;
        for (std::uint64_t mask = lo; mask <= hi; ++mask) {
          gaps.clear();
          for (Part b = 0; b < max_f; ++b)
            if (mask & (1ull << b)) gaps.push_back(b + 1);
          per_set(gaps, chunk_failures[static_cast<std::size_t>(c)]);
        }
        done += hi - lo + 1;
      }
    });
  }
  for (auto& t : workers) t.join();
  instances += done.load();
  for (auto& cf : chunk_failures)
    failures.insert(failures.end(), std::make_move_iterator(cf.begin()),
                    std::make_move_iterator(cf.end()));
}

void all_diagrams_up_to(Part max_cells, const std::function<void(const std::vector<Part>&)>& f) {
  std::vector<Part> rows;
  auto rec = [&](auto&& self, Part budget, Part cap) -> void {
    for (Part r = std::min(budget, cap); r >= 1; --r) {
      rows.push_back(r);
      f(rows);
      self(self, budget - r, r);
      rows.pop_back();
    }
  };
  rec(rec, max_cells, max_cells);
}

void roundtrips_suite(VerificationReport& report, const SuiteParams& p, int jobs) {
  if (p.max_cells < 1 || p.max_cells > 40)
    fail(Status::InvalidArgument, "max cells must lie in [1, 40]");
  // numerical-set side: KN roundtrip, hook/gap identities, closure tests
  for_each_gap_set(
      p.max_frobenius, jobs, report.failures, report.instances,
      [&](const std::vector<Part>& gaps, std::vector<FailureRecord>& out) {
        auto set_str = [&] {
          std::string s = "gaps {";
          for (std::size_t i = 0; i < gaps.size(); ++i)
            s += (i ? "," : "") + std::to_string(gaps[i]);
          return s + "}";
        };
        const auto s = NumericalSet::from_gaps(gaps);
        const auto y = kn_transform(s);
        if (kn_inverse(y) != s) {
          out.push_back(FailureRecord{"kn_roundtrip", set_str(), "identity", "differs"});
          return;
        }
        const HookGrid g = hook_grid(y);
        // first column lists the gaps in descending order
        const auto fc = g.first_column();
        for (std::size_t i = 0; i < fc.size(); ++i) {
          if (fc[i] != gaps[gaps.size() - 1 - i]) {
            out.push_back(FailureRecord{"first_column_gaps", set_str(),
                                        "gaps descending", "differs"});
            return;
          }
        }
        // top-row hooks are F - s_{i-1}
        const auto members = s.small_elements(s.frobenius());
        for (Part j = 1; j <= y.rows()[0]; ++j) {
          if (g.at(1, j) != s.frobenius() - members[static_cast<std::size_t>(j - 1)]) {
            out.push_back(
                FailureRecord{"top_row_members", set_str(), "F - s_{i-1}", "differs"});
            return;
          }
        }
        // interior hooks from the border ones
        for (int i = 2; i <= y.row_count(); ++i)
          for (Part j = 2; j <= y.rows()[static_cast<std::size_t>(i - 1)]; ++j)
            if (g.at(i, j) != g.at(1, j) + g.at(i, 1) - g.at(1, 1)) {
              out.push_back(
                  FailureRecord{"interior_hook_identity", set_str(), "holds", "differs"});
              return;
            }
        const auto closure = s.closure();
        if (gaps.back() <= p.max_frobenius_hook) {
          // closure <-> every hook value occurs in the first column
          std::set<Part> fc_set(fc.begin(), fc.end());
          bool hooks_in_first = true;
          for (const auto& row : g.hooks)
            for (Part h : row)
              if (!fc_set.count(h)) hooks_in_first = false;
          if (closure.closed != hooks_in_first)
            out.push_back(FailureRecord{"closure_vs_hook_criterion", set_str(),
                                        closure.closed ? "closed" : "open", "differs"});
        }
        if (closure.closed) {
          // gaps of a semigroup form an unrefinable partition
          std::vector<char> scratch;
          if (!quick_unrefinable(gaps, scratch))
            out.push_back(
                FailureRecord{"semigroup_gaps_unrefinable", set_str(), "unrefinable",
                              "refinable"});
        }
      });

  // diagram side: inverse then transform
  all_diagrams_up_to(p.max_cells, [&](const std::vector<Part>& rows) {
    ++report.instances;
    const auto y = YoungDiagram::from_rows(rows);
    if (kn_transform(kn_inverse(y)) != y) {
      std::string s = "rows (";
      for (std::size_t i = 0; i < rows.size(); ++i)
        s += (i ? "," : "") + std::to_string(rows[i]);
      report.failures.push_back(FailureRecord{"kn_roundtrip_diagram", s + ")", "identity",
                                              "differs"});
    }
  });
}

void structure_suite(VerificationReport& report, const SuiteParams& p, int jobs) {
  const Part cap = p.max_weight.value_or(153);
  const SearchMode mode = p.mode == SearchMode::Auto ? SearchMode::Optimized : p.mode;
  for (const auto& bcase : bijection_instances(cap, p.min_n)) {
    const auto ubar = max_missing_ubar(bcase.weight(), mode, jobs);
    for (const auto& lam : ubar) {
      ++report.instances;
      std::ostringstream in;
      in << case_name(bcase.kind) << " n=" << bcase.n << " k=" << bcase.k << ' '
         << parts_str(lam);
      auto fail_check = [&](const std::string& check, const std::string& expected,
                            const std::string& got) {
        report.failures.push_back(FailureRecord{check, in.str(), expected, got});
      };
      const auto y = kn_transform(NumericalSet::from_partition(lam));
      const Part n = bcase.n, k = bcase.k;
      const Part cells_expected = bcase.kind == CaseKind::Triangular ? 3 * n - 3
                                  : bcase.kind == CaseKind::NT5      ? 2 * n - 3 + 2 * k
                                                                     : 2 * n - 4 + 2 * k;
      if (y.cell_count() != cells_expected)
        fail_check("cell_count", std::to_string(cells_expected), std::to_string(y.cell_count()));
      if (static_cast<Part>(lam.size()) != n - 2)
        fail_check("part_count", std::to_string(n - 2), std::to_string(lam.size()));

      if (bcase.kind == CaseKind::NT5) {
        if (!y.is_self_conjugate()) fail_check("self_conjugate", "true", "false");
        if (lam.missing_count() != n - 3)
          fail_check("missing_count", std::to_string(n - 3), std::to_string(lam.missing_count()));
        continue;
      }
      if (lam.missing_count() != n - 2)
        fail_check("missing_count", std::to_string(n - 2), std::to_string(lam.missing_count()));
      Part z = 0;
      try {
        const auto profile = quasi_symmetric_profile(y, n);
        z = profile.z;
        Part extra_sum = 0;
        for (Part h : profile.extra_column_hooks) extra_sum += h;
        if (extra_sum != k)
          fail_check("extra_column_sum", std::to_string(k), std::to_string(extra_sum));
      } catch (const Error& e) {
        fail_check("quasi_symmetric_profile", "present", e.what());
        continue;
      }
      const HookGrid g = hook_grid(y);
      for (Part i = 1; i <= static_cast<Part>(y.row_count()); ++i) {
        const Part ri = y.rows()[static_cast<std::size_t>(i - 1)];
        const Part expect = i <= z ? y.column_height(i) + 1 : y.column_height(i + 1);
        if (ri != expect) {
          fail_check("row_column_relation", std::to_string(expect), std::to_string(ri));
          break;
        }
      }
      bool sym_ok = true;
      for (Part i = 1; sym_ok && i <= z; ++i)
        for (Part j = 1; sym_ok && j <= z; ++j)
          if (y.has_cell(static_cast<int>(i), j))
            sym_ok = y.has_cell(static_cast<int>(j), i) &&
                     g.at(static_cast<int>(i), j) == g.at(static_cast<int>(j), i);
      for (Part i = z + 1; sym_ok && i <= static_cast<Part>(y.row_count()); ++i)
        for (Part j = 1; sym_ok && j <= std::min<Part>(z, y.rows()[static_cast<std::size_t>(i - 1)]); ++j)
          sym_ok = y.has_cell(static_cast<int>(j), i + 1) &&
                   g.at(static_cast<int>(i), j) == g.at(static_cast<int>(j), i + 1);
      if (!sym_ok) fail_check("hook_symmetry", "holds", "differs");
    }
  }
}

void exceptions_suite(VerificationReport& report, const SuiteParams& p, int jobs) {
  (void)jobs;
  auto check = [&](const std::string& check_name, const std::string& input, bool ok,
                   const std::string& expected = "true", const std::string& got = "false") {
    ++report.instances;
    if (!ok) report.failures.push_back(FailureRecord{check_name, input, expected, got});
  };
  for (Part n = std::max<Part>(p.min_n, 6); n <= p.max_n; ++n) {
    for (const ExceptionalKind kind :
         {ExceptionalKind::Pi, ExceptionalKind::Sigma, ExceptionalKind::Tau}) {
      const auto exc = exceptional(kind, n);
      const std::string input =
          std::string(exceptional_kind_name(kind)) + " n=" + std::to_string(n);
      check("exceptional_unrefinable", input,
            is_unrefinable_definitional(exc.partition).unrefinable &&
                is_unrefinable_geometric(exc.partition).unrefinable);
      const Part expected_weight = kind == ExceptionalKind::Pi ? triangular_number(n)
                                   : kind == ExceptionalKind::Sigma
                                       ? triangular_number(n) - 3
                                       : triangular_number(n) - 4;
      check("exceptional_weight", input, exc.partition.weight() == expected_weight);
      // all three sit strictly below the missing-parts bound
      check("exceptional_outside_ubar", input,
            exc.partition.missing_count() < exc.partition.largest() / 2);
    }
  }
  for (const auto& bcase : bijection_instances(p.max_weight.value_or(153), p.min_n)) {
    if (bcase.n > p.max_n) continue;
    if (bcase.kind == CaseKind::NT4 && bcase.d() > 3) {
      const auto zeta = exceptional(ExceptionalKind::Zeta, bcase.n, bcase.k);
      const std::string input =
          "zeta n=" + std::to_string(bcase.n) + " k=" + std::to_string(bcase.k);
      check("zeta_unrefinable", input,
            is_unrefinable_definitional(zeta.partition).unrefinable);
      check("zeta_weight", input, zeta.partition.weight() == bcase.weight());
      check("zeta_attains_missing_bound", input,
            zeta.partition.missing_count() == zeta.partition.largest() / 2);
      const auto img = forward(zeta.partition, bcase);
      check("zeta_forward_improper_k", input,
            img.improper && img.partition.parts() == std::vector<Part>{bcase.k});
    }
    if (!bcase.excluded_eta().empty()) {
      for (const auto& finding : demonstrate_exclusion(bcase)) {
        const std::string input = std::string(case_name(bcase.kind)) +
                                  " n=" + std::to_string(bcase.n) +
                                  " eta=" + parts_str(finding.eta);
        check("excluded_eta_fails_criterion", input,
              finding.definitional_refinable && !finding.offending.empty());
      }
    }
  }
}

}  // namespace

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
  VerificationReport report;
  report.suite = name;
  report.params["min_n"] = params.min_n;
  report.params["max_n"] = params.max_n;
  if (params.max_weight) report.params["max_weight"] = *params.max_weight;
  const int jobs = resolve_jobs(params.jobs);
  Stopwatch watch;
  if (name == "counts") {
    counts_suite(report, params, jobs);
  } else if (name == "equivalence") {
    equivalence_suite(report, params, jobs);
  } else if (name == "roundtrips") {
    roundtrips_suite(report, params, jobs);
  } else if (name == "structure") {
    structure_suite(report, params, jobs);
  } else if (name == "exceptions") {
    exceptions_suite(report, params, jobs);
  } else {
    fail(Status::UnknownSuite, "no suite named '" + name + "'");
  }
  report.wall_seconds = watch.seconds();
  return report;
}

VerificationReport oeis_check(const BFile& bfile, Part max_index, int jobs) {
  VerificationReport report;
  report.suite = "oeis-check";
  report.params["max"] = max_index;
  jobs = resolve_jobs(jobs);
  Stopwatch watch;
  for (const auto& [index, value] : bfile.entries) {
    if (index < 1 || index > max_index) continue;
    ++report.instances;
    const Part proper = count_unrefinable(index, jobs);
    // The single-part partition (N) is itself unrefinable only for N <= 2, so
    // the two counting conventions differ exactly there.
    const Part with_singletons = proper + (index <= 2 ? 1 : 0);
    if (value != proper && value != with_singletons) {
      report.failures.push_back(FailureRecord{"count_mismatch", "N=" + std::to_string(index),
                                              std::to_string(proper), std::to_string(value)});
    }
  }
  report.wall_seconds = watch.seconds();
  return report;
}

ordered_json VerificationReport::to_json() const {
  ordered_json j;
  j["suite"] = suite;
  j["params"] = params;
  j["instances"] = instances;
  j["pass"] = pass();
  ordered_json fj = ordered_json::array();
  for (const auto& f : failures) {
    ordered_json rec;
    rec["check"] = f.check;
    rec["input"] = f.input;
    rec["expected"] = f.expected;
    rec["got"] = f.got;
    fj.push_back(rec);
  }
  j["failures"] = fj;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (pass() ? "PASS" : "FAIL") << " (" << instances
     << " instances, " << failures.size() << " failures, " << wall_seconds << "s)\n";
  for (const auto& f : failures)
    os << "  " << f.check << " @ " << f.input << ": expected " << f.expected << ", got "
       << f.got << '\n';
  return os.str();
}

}  // namespace unref

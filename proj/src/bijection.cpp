#include "bijection.hpp"

#include <map>
#include <set>
#include <sstream>

namespace unref {

const char* case_name(CaseKind c) {
  switch (c) {
    case CaseKind::Triangular: return "triangular";
    case CaseKind::NT5: return "nt5";
    case CaseKind::NT4: return "nt4";
  }
  return "unknown";
}

Part BijectionCase::d() const {
  switch (kind) {
    case CaseKind::Triangular: return 0;
    case CaseKind::NT5: return n - 2 * k;
    case CaseKind::NT4: return n - 2 * k + 1;
  }
  return 0;
}

BijectionCase BijectionCase::triangular(Part n) {
  if (n < 7 || n % 2 == 0)
    fail(Status::InvalidArgument, "triangular case needs odd n >= 7");
  return BijectionCase{CaseKind::Triangular, n, (n + 1) / 2};
}

BijectionCase BijectionCase::nt5(Part n, Part k) {
  if (n < 6 || k < 1 || 2 * k > n - 4)
    fail(Status::InvalidArgument, "nt5 case needs 2 <= 2k <= n-4");
  return BijectionCase{CaseKind::NT5, n, k};
}

BijectionCase BijectionCase::nt4(Part n, Part k) {
  if (k < 4 || 2 * k > n - 2)
    fail(Status::InvalidArgument, "nt4 case needs 8 <= 2k <= n-2");
  return BijectionCase{CaseKind::NT4, n, k};
}

std::vector<DistinctPartition> BijectionCase::excluded_eta() const {
  switch (kind) {
    case CaseKind::Triangular:
      // (3, k-3) as long as it is a genuine distinct pair
      if (k - 3 >= 1 && k - 3 != 3)
        return {DistinctPartition::make({3, k - 3})};
      return {};
    case CaseKind::NT5:
      if (2 * k == n - 4) return {DistinctPartition::make({1, 2 * k + 1})};
      return {};
    case CaseKind::NT4:
      return {};
  }
  return {};
}

BijectionCase classify(const DistinctPartition& lambda) {
  const auto dec = triangular_decompose(lambda.weight());
  const Part n = dec.n, d = dec.d;
  const Part lt = lambda.largest();
  if (d == 0) {
    if (n % 2 == 0)
      fail(Status::Unclassifiable, "even triangular weight: only the pi partition exists");
    if ((n + 1) / 2 < 4) fail(Status::Unclassifiable, "triangular case needs k >= 4");
    return BijectionCase::triangular(n);
  }
  if (d == 1 || d == 2)
    fail(Status::Unclassifiable, "d in {1,2} carries no bijection");
  if (lt == 2 * n - 5 && (n - d) % 2 == 0) {
    const Part k = (n - d) / 2;
    if (k >= 1 && 2 * k <= n - 4) return BijectionCase::nt5(n, k);
  }
  if (lt == 2 * n - 4 && (n - d) % 2 != 0) {
    const Part k = (n - d + 1) / 2;
    if (k >= 4 && 2 * k <= n - 2) return BijectionCase::nt4(n, k);
  }
  fail(Status::Unclassifiable, "largest part does not match any case shape");
}

EtaPartition forward(const DistinctPartition& lambda, const BijectionCase& bcase) {
  if (lambda.largest() != bcase.lambda_t())
    fail(Status::ShapeMismatch, "largest part is not the case bound");
  const YoungDiagram y = kn_transform(NumericalSet::from_partition(lambda));
  std::vector<Part> eta;
  if (bcase.kind == CaseKind::NT5) {
    if (!y.is_self_conjugate())
      fail(Status::ShapeMismatch, "diagram is not self-conjugate");
    const HookGrid g = hook_grid(y);
    for (Part i = 2; y.has_cell(static_cast<int>(i), i); ++i)
      eta.push_back(g.at(static_cast<int>(i), i));
    for (Part v : eta)
      if (v % 2 == 0) fail(Status::ShapeMismatch, "diagonal hook is even");
  } else {
    QuasiSymmetricProfile profile;
    try {
      profile = quasi_symmetric_profile(y, bcase.n);
    } catch (const Error& e) {
      fail(Status::ShapeMismatch, std::string("profile probe failed: ") + e.what());
    }
    eta = profile.extra_column_hooks;
  }
  std::sort(eta.begin(), eta.end());
  if (eta.empty()) fail(Status::ShapeMismatch, "empty image");
  Part sum = 0;
  for (Part v : eta) sum += v;
  if (sum != bcase.eta_weight())
    fail(Status::ShapeMismatch, "image weight " + std::to_string(sum) + " is not " +
                                    std::to_string(bcase.eta_weight()));
  auto p = DistinctPartition::make(std::move(eta));
  const bool improper = !p.is_proper();
  return EtaPartition{std::move(p), improper};
}

namespace {

void check_eta_in_family(const DistinctPartition& eta, const BijectionCase& bcase) {
  if (eta.weight() != bcase.eta_weight())
    fail(Status::ConstraintViolation, "eta weight " + std::to_string(eta.weight()) +
                                          " is not " + std::to_string(bcase.eta_weight()));
  if (bcase.eta_parity() == Parity::OddOnly)
    for (Part v : eta.parts())
      if (v % 2 == 0) fail(Status::ConstraintViolation, "eta part " + std::to_string(v) + " is even");
  if (!eta.is_proper())
    fail(Status::ConstraintViolation, "eta must have at least two parts");
  if (eta.largest() > bcase.n - 3)
    fail(Status::ConstraintViolation, "eta part exceeds n-3");
}

}  // namespace

DistinctPartition backward_raw(const DistinctPartition& eta, const BijectionCase& bcase) {
  const Part n = bcase.n;
  std::vector<Part> parts;
  std::set<Part> removed;
  if (bcase.kind == CaseKind::NT5) {
    const Part B = 2 * n - 5;
    for (Part e : eta.parts()) removed.insert((B - e) / 2);
    for (Part x = 1; x <= n - 3; ++x)
      if (!removed.count(x)) parts.push_back(x);
    for (Part e : eta.parts()) parts.push_back((B + e) / 2);
    parts.push_back(B);
  } else {
    for (Part e : eta.parts()) removed.insert(n - 2 - e);
    for (Part x = 1; x <= n - 3; ++x)
      if (!removed.count(x)) parts.push_back(x);
    for (Part e : eta.parts()) parts.push_back(n - 2 + e);
    parts.push_back(2 * n - 4);
  }
  return DistinctPartition::make(std::move(parts));
}

DistinctPartition backward(const DistinctPartition& eta, const BijectionCase& bcase) {
  check_eta_in_family(eta, bcase);
  for (const auto& ex : bcase.excluded_eta())
    if (eta == ex)
      fail(Status::ExcludedEta, "eta is the excluded element of this case");
  auto lambda = backward_raw(eta, bcase);

  if (lambda.weight() != bcase.weight())
    fail(Status::ConstraintViolation, "constructed weight is wrong");
  const YoungDiagram y = kn_transform(NumericalSet::from_partition(lambda));
  const HookGrid g = hook_grid(y);
  const Part l = eta.size();
  const bool doubled = bcase.kind != CaseKind::NT5;
  if (g.at(1, 1) != bcase.lambda_t())
    fail(Status::ConstraintViolation, "corner hook is not the case bound");
  for (Part i = 2; i <= l + 1; ++i) {
    const Part expected = eta.parts()[static_cast<std::size_t>(l - (i - 2) - 1)];
    if (!y.has_cell(static_cast<int>(i), i) ||
        g.at(static_cast<int>(i), i) != (doubled ? 2 * expected : expected))
      fail(Status::ConstraintViolation, "diagonal hooks do not encode eta");
  }
  for (Part i = 1; i <= l + 1; ++i) {
    const Part arm = y.rows()[static_cast<std::size_t>(i - 1)] - i;
    const Part leg = y.column_height(i) - i;
    if (arm != leg + (doubled ? 1 : 0))
      fail(Status::ConstraintViolation, "diagonal arm/leg condition fails");
  }
  if (!is_unrefinable_definitional(lambda).unrefinable ||
      !is_unrefinable_geometric(lambda).unrefinable)
    fail(Status::ConstraintViolation, "constructed partition is refinable");
  return lambda;
}

std::vector<DistinctPartition> target_family(const BijectionCase& bcase) {
  return collect_distinct(bcase.eta_weight(), PartFilter{2, std::nullopt, bcase.eta_parity()});
}

std::vector<ExclusionFinding> demonstrate_exclusion(const BijectionCase& bcase) {
  const auto excluded = bcase.excluded_eta();
  if (excluded.empty())
    fail(Status::InvalidArgument, "case excludes no eta");
  std::vector<ExclusionFinding> findings;
  for (const auto& eta : excluded) {
    auto lambda = backward_raw(eta, bcase);
    auto geo = is_unrefinable_geometric(lambda);
    const bool refinable = !is_unrefinable_definitional(lambda).unrefinable;
    findings.push_back(ExclusionFinding{
        eta, std::move(lambda),
        geo.offending ? std::move(*geo.offending) : std::vector<OffendingCell>{}, refinable});
  }
  return findings;
}

bool BijectionVerifyReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

std::string parts_str(const DistinctPartition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

BijectionVerifyReport verify_bijection(const BijectionCase& bcase, SearchMode mode, int jobs) {
  BijectionVerifyReport report;
  report.bcase = bcase;
  auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    report.checks.push_back(BijectionCheck{name, pass, detail});
  };

  const auto mup = maximal_unrefinable(bcase.weight(), mode, jobs);
  const auto ubar = max_missing_subfamily(mup);
  const auto family = target_family(bcase);
  const auto excluded = bcase.excluded_eta();
  std::vector<DistinctPartition> family_ok;
  for (const auto& e : family)
    if (std::find(excluded.begin(), excluded.end(), e) == excluded.end())
      family_ok.push_back(e);

  report.mup_size = mup.size();
  report.ubar_size = ubar.size();
  report.family_size = family.size();
  report.excluded_size = excluded.size();

  check("max_lambda_t_matches_bound",
        !mup.empty() && mup.front().largest() == bcase.lambda_t(),
        "largest part " + std::to_string(mup.empty() ? 0 : mup.front().largest()));

  // forward everything
  std::vector<std::pair<DistinctPartition, DistinctPartition>> proper_imgs;  // (lambda, eta)
  std::vector<std::pair<DistinctPartition, DistinctPartition>> improper_imgs;
  bool forward_ok = true;
  std::string forward_detail;
  for (const auto& lam : ubar) {
    try {
      auto img = forward(lam, bcase);
      if (img.improper)
        improper_imgs.emplace_back(lam, img.partition);
      else
        proper_imgs.emplace_back(lam, img.partition);
    } catch (const Error& e) {
      forward_ok = false;
      forward_detail = parts_str(lam) + ": " + e.what();
      break;
    }
  }
  report.improper_images = improper_imgs.size();
  check("forward_total_on_ubar", forward_ok, forward_detail);

  std::set<DistinctPartition> img_set;
  bool injective = true;
  for (const auto& [lam, eta] : proper_imgs)
    if (!img_set.insert(eta).second) injective = false;
  check("forward_injective", injective);

  std::set<DistinctPartition> fam_ok_set(family_ok.begin(), family_ok.end());
  bool in_family = true;
  std::string member_detail;
  for (const auto& [lam, eta] : proper_imgs)
    if (!fam_ok_set.count(eta)) {
      in_family = false;
      member_detail = parts_str(lam) + " -> " + parts_str(eta);
      break;
    }
  check("image_in_target_minus_exclusions", in_family, member_detail);
  check("forward_surjective", img_set == fam_ok_set,
        std::to_string(img_set.size()) + " images vs " + std::to_string(fam_ok_set.size()) +
            " targets");

  bool bf_id = true;
  std::string bf_detail;
  for (const auto& [lam, eta] : proper_imgs) {
    try {
      if (backward(eta, bcase) != lam) {
        bf_id = false;
        bf_detail = parts_str(eta);
        break;
      }
    } catch (const Error& e) {
      bf_id = false;
      bf_detail = parts_str(eta) + ": " + e.what();
      break;
    }
  }
  check("backward_after_forward_is_identity", bf_id, bf_detail);

  bool fb_id = true;
  std::string fb_detail;
  for (const auto& eta : family_ok) {
    try {
      auto lam = backward(eta, bcase);
      auto round = forward(lam, bcase);
      if (round.improper || round.partition != eta) {
        fb_id = false;
        fb_detail = parts_str(eta);
        break;
      }
    } catch (const Error& e) {
      fb_id = false;
      fb_detail = parts_str(eta) + ": " + e.what();
      break;
    }
  }
  check("forward_after_backward_is_identity", fb_id, fb_detail);

  // exceptional accounting
  std::size_t exceptional_count = 0;
  const auto in_mup_outside_ubar = [&](const DistinctPartition& p) {
    return std::find(mup.begin(), mup.end(), p) != mup.end() &&
           std::find(ubar.begin(), ubar.end(), p) == ubar.end();
  };
  if (bcase.kind == CaseKind::Triangular) {
    const auto pi = exceptional(ExceptionalKind::Pi, bcase.n);
    check("pi_in_mup_outside_ubar", in_mup_outside_ubar(pi.partition), parts_str(pi.partition));
    exceptional_count = 1;
  } else if (bcase.kind == CaseKind::NT5) {
    if (2 * bcase.k == bcase.n - 4) {
      const auto tau = exceptional(ExceptionalKind::Tau, bcase.n);
      check("tau_in_mup_outside_ubar", in_mup_outside_ubar(tau.partition),
            parts_str(tau.partition));
      exceptional_count = 1;
    }
  } else {
    if (bcase.d() == 3) {
      const auto sigma = exceptional(ExceptionalKind::Sigma, bcase.n);
      check("sigma_in_mup_outside_ubar", in_mup_outside_ubar(sigma.partition),
            parts_str(sigma.partition));
      exceptional_count = 1;
    } else {
      const auto zeta = exceptional(ExceptionalKind::Zeta, bcase.n, bcase.k);
      const bool zeta_ok = improper_imgs.size() == 1 && improper_imgs[0].first == zeta.partition &&
                           improper_imgs[0].second.parts() == std::vector<Part>{bcase.k};
      check("zeta_maps_to_improper_k", zeta_ok, parts_str(zeta.partition));
    }
  }
  if (!(bcase.kind == CaseKind::NT4 && bcase.d() > 3))
    check("no_unexpected_improper_images", improper_imgs.empty());

  report.expected_mup = family_ok.size() + exceptional_count + improper_imgs.size();
  check("mup_count_identity_with_accounting", report.mup_size == report.expected_mup,
        std::to_string(report.mup_size) + " vs " + std::to_string(report.expected_mup));
  return report;
}

std::vector<BijectionCase> bijection_instances(Part max_weight, Part min_n) {
  std::vector<BijectionCase> out;
  min_n = std::max<Part>(min_n, 6);
  for (Part n = min_n; triangular_number(n) - (n - 1) <= max_weight; ++n) {
    if (n % 2 != 0 && n >= 7 && triangular_number(n) <= max_weight)
      out.push_back(BijectionCase::triangular(n));
    for (Part k = 1; 2 * k <= n - 4; ++k)
      if (triangular_number(n) - (n - 2 * k) <= max_weight)
        out.push_back(BijectionCase::nt5(n, k));
    for (Part k = 4; 2 * k <= n - 2; ++k)
      if (triangular_number(n) - (n - 2 * k + 1) <= max_weight)
        out.push_back(BijectionCase::nt4(n, k));
  }
  return out;
}

}  // namespace unref

#include "maximal.hpp"

#include <atomic>
#include <thread>

#include "parallel.hpp"

namespace unref {

BoundSpec lambda_t_bound(Part n, Part d) {
  if (n < 6) fail(Status::OutOfRange, "bounds are only proven for n >= 6");
  if (d < 0 || d > n - 1) fail(Status::OutOfRange, "d must lie in [0, n-1]");
  if (d == 0) return BoundSpec{n, d, 2 * n - 4, BoundRegime::Triangular};
  if (d == 1) return BoundSpec{n, d, 2 * n - 2, BoundRegime::D1};
  if (d == 2) return BoundSpec{n, d, 2 * n - 3, BoundRegime::D2};
  if (d == 3) return BoundSpec{n, d, 2 * n - 4, BoundRegime::D3};
  if ((n - d) % 2 != 0) return BoundSpec{n, d, 2 * n - 4, BoundRegime::GeneralOdd};
  return BoundSpec{n, d, 2 * n - 5, BoundRegime::GeneralEven};
}

const char* regime_name(BoundRegime r) {
  switch (r) {
    case BoundRegime::Triangular: return "triangular";
    case BoundRegime::D1: return "d=1";
    case BoundRegime::D2: return "d=2";
    case BoundRegime::D3: return "d=3";
    case BoundRegime::GeneralOdd: return "general-odd";
    case BoundRegime::GeneralEven: return "general-even";
  }
  return "unknown";
}

void enumerate_unrefinable(Part N, const PartVisitor& visit) {
  if (N < 3) return;
  std::vector<char> scratch;
  enumerate_distinct(N, PartFilter{2, std::nullopt, Parity::Any},
                     [&](std::span<const Part> parts) {
                       if (!quick_unrefinable(parts, scratch)) return true;
                       return visit(parts);
                     });
}

std::vector<DistinctPartition> collect_unrefinable(Part N, int jobs) {
  jobs = resolve_jobs(jobs);
  if (N < 3) return {};
  if (jobs <= 1) {
    std::vector<DistinctPartition> out;
    enumerate_unrefinable(N, [&](std::span<const Part> parts) {
      out.push_back(DistinctPartition::make({parts.begin(), parts.end()}));
      return true;
    });
    return out;
  }
  // bucket by smallest part, then concatenate in order
  std::vector<std::vector<DistinctPartition>> buckets(static_cast<std::size_t>(N + 1));
  std::vector<std::thread> workers;
  const PartFilter proper{2, std::nullopt, Parity::Any};
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      std::vector<char> scratch;
      for (Part first = 1 + w; first <= N; first += jobs) {
        auto& bucket = buckets[static_cast<std::size_t>(first)];
        enumerate_distinct(N, proper, first, first, [&](std::span<const Part> parts) {
          if (quick_unrefinable(parts, scratch))
            bucket.push_back(DistinctPartition::make({parts.begin(), parts.end()}));
          return true;
        });
      }
    });
  }
  for (auto& t : workers) t.join();
  std::vector<DistinctPartition> out;
  for (auto& bucket : buckets)
    out.insert(out.end(), std::make_move_iterator(bucket.begin()),
               std::make_move_iterator(bucket.end()));
  return out;
}

Part count_unrefinable(Part N, int jobs) {
  jobs = resolve_jobs(jobs);
  if (N < 3) return 0;
  if (jobs <= 1) {
    Part count = 0;
    enumerate_unrefinable(N, [&](std::span<const Part>) {
      ++count;
      return true;
    });
    return count;
  }
  std::atomic<Part> count{0};
  std::vector<std::thread> workers;
  const PartFilter proper{2, std::nullopt, Parity::Any};
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      std::vector<char> scratch;
      Part local = 0;
      for (Part first = 1 + w; first <= N; first += jobs) {
        enumerate_distinct(N, proper, first, first, [&](std::span<const Part> parts) {
          if (quick_unrefinable(parts, scratch)) ++local;
          return true;
        });
      }
      count += local;
    });
  }
  for (auto& t : workers) t.join();
  return count.load();
}

namespace {

// Unrefinable partitions of N whose largest part is pinned to B. Once B is a
// part, any pair {x, B-x} with both elements missing would refine B, so every
// such pair contributes x, B-x or both; B/2 (when integral) is free.
std::vector<DistinctPartition> pinned_layer_unrefinable(Part N, Part B) {
  std::vector<DistinctPartition> out;
  const Part target = N - B;
  if (target < 0) return out;
  const Part half = (B - 1) / 2;
  const bool has_mid = B % 2 == 0;
  const Part mid = B / 2;

  std::vector<Part> min_suf(static_cast<std::size_t>(half + 2), 0);
  std::vector<Part> max_suf(static_cast<std::size_t>(half + 2), 0);
  for (Part x = half; x >= 1; --x) {
    min_suf[static_cast<std::size_t>(x)] = min_suf[static_cast<std::size_t>(x + 1)] + x;
    max_suf[static_cast<std::size_t>(x)] = max_suf[static_cast<std::size_t>(x + 1)] + B;
  }

  std::vector<Part> chosen;
  chosen.reserve(static_cast<std::size_t>(B));
  std::vector<char> scratch;

  auto emit = [&](bool with_mid) {
    std::vector<Part> parts = chosen;
    if (with_mid) parts.push_back(mid);
    parts.push_back(B);
    std::sort(parts.begin(), parts.end());
    if (quick_unrefinable(parts, scratch))
      out.push_back(DistinctPartition::make(std::move(parts)));
  };

  auto rec = [&](auto&& self, Part x, Part sum) -> void {
    if (x > half) {
      const Part rem = target - sum;
      if (rem == 0) emit(false);
      else if (has_mid && rem == mid) emit(true);
      return;
    }
    const Part slack = has_mid ? mid : 0;
    for (int state = 0; state < 3; ++state) {
      const Part c = state == 0 ? x : (state == 1 ? B - x : B);
      const Part s = sum + c;
      if (s + min_suf[static_cast<std::size_t>(x + 1)] > target) continue;
      if (s + max_suf[static_cast<std::size_t>(x + 1)] + slack < target) continue;
      chosen.push_back(state == 1 ? B - x : x);
      if (state == 2) chosen.push_back(B - x);
      self(self, x + 1, s);
      if (state == 2) chosen.pop_back();
      chosen.pop_back();
    }
  };
  if (half >= 1) {
    rec(rec, 1, 0);
  } else {
    // B <= 2: no pairs at all
    const Part rem = target;
    if (rem == 0) emit(false);
    else if (has_mid && rem == mid) emit(true);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DistinctPartition> maximal_naive(Part N, int jobs) {
  auto all = collect_unrefinable(N, jobs);
  if (all.empty()) fail(Status::EmptyUniverse, "no unrefinable partition of this weight");
  Part best = 0;
  for (const auto& p : all) best = std::max(best, p.largest());
  std::vector<DistinctPartition> out;
  for (auto& p : all)
    if (p.largest() == best) out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<DistinctPartition> maximal_unrefinable(Part N, SearchMode mode, int jobs) {
  if (N < 3) fail(Status::EmptyUniverse, "no proper distinct partition of weight < 3");
  if (mode == SearchMode::Auto) mode = N <= kExhaustiveCap ? SearchMode::Naive : SearchMode::Optimized;
  if (mode == SearchMode::Naive) return maximal_naive(N, jobs);

  const auto dec = triangular_decompose(N);
  const auto spec = lambda_t_bound(dec.n, dec.d);
  auto layer = pinned_layer_unrefinable(N, spec.bound);
  if (layer.empty())
    fail(Status::ConstraintViolation,
         "largest-part bound " + std::to_string(spec.bound) +
             " not attained at weight " + std::to_string(N) + "; use the naive mode");
  return layer;
}

std::vector<DistinctPartition> max_missing_subfamily(const std::vector<DistinctPartition>& mup) {
  std::vector<DistinctPartition> out;
  if (mup.empty()) return out;
  const Part lt = mup.front().largest();
  for (const auto& p : mup) {
    if (p.largest() != lt)
      fail(Status::InvalidArgument, "inputs must share the same largest part");
    if (p.missing_count() == lt / 2) out.push_back(p);
  }
  return out;
}

std::vector<DistinctPartition> max_missing_ubar(Part N, SearchMode mode, int jobs) {
  return max_missing_subfamily(maximal_unrefinable(N, mode, jobs));
}

const char* exceptional_kind_name(ExceptionalKind k) {
  switch (k) {
    case ExceptionalKind::Pi: return "pi";
    case ExceptionalKind::Sigma: return "sigma";
    case ExceptionalKind::Tau: return "tau";
    case ExceptionalKind::Zeta: return "zeta";
  }
  return "unknown";
}

ExceptionalPartition exceptional(ExceptionalKind kind, Part n, std::optional<Part> k) {
  std::vector<Part> parts;
  Part expected_weight = 0;
  switch (kind) {
    case ExceptionalKind::Pi:
      for (Part v = 1; v <= n - 3; ++v) parts.push_back(v);
      parts.push_back(n + 1);
      parts.push_back(2 * n - 4);
      expected_weight = triangular_number(n);
      break;
    case ExceptionalKind::Sigma:
      for (Part v = 1; v <= n - 2; ++v) parts.push_back(v);
      parts.push_back(2 * n - 4);
      expected_weight = triangular_number(n) - 3;
      break;
    case ExceptionalKind::Tau:
      for (Part v = 1; v <= n - 2; ++v) parts.push_back(v);
      parts.push_back(2 * n - 5);
      expected_weight = triangular_number(n) - 4;
      break;
    case ExceptionalKind::Zeta: {
      if (!k || *k < 1) fail(Status::InvalidArgument, "zeta needs k >= 1");
      if (n - *k - 3 < 0) fail(Status::PatternCollision, "zeta pattern needs n >= k+3");
      for (Part v = 1; v <= n - *k - 3; ++v) parts.push_back(v);
      for (Part v = n - *k - 1; v <= n - 3; ++v) parts.push_back(v);
      parts.push_back(n - 2 + *k);
      parts.push_back(2 * n - 4);
      expected_weight = triangular_number(n) - (n - 2 * *k + 1);
      break;
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || (i > 0 && parts[i] <= parts[i - 1]))
      fail(Status::PatternCollision, "pattern is not strictly increasing at n=" +
                                         std::to_string(n));
  }
  auto p = DistinctPartition::make(std::move(parts));
  if (p.weight() != expected_weight)
    fail(Status::ConstraintViolation, "pattern weight mismatch");
  return ExceptionalPartition{kind, n, k, std::move(p)};
}

}  // namespace unref

#include "refinability.hpp"

#include <mutex>
#include <thread>

#include "parallel.hpp"

namespace unref {

RefinabilityVerdict is_unrefinable_definitional(const DistinctPartition& p) {
  const auto missing = p.missing_parts();
  std::vector<char> is_missing(static_cast<std::size_t>(p.largest() + 1), 0);
  for (Part m : missing) is_missing[static_cast<std::size_t>(m)] = 1;
  for (Part part : p.parts()) {
    // mu_i + mu_j = part with mu_i < mu_j forces mu_j > part/2
    for (Part mu_j : missing) {
      if (mu_j >= part) break;
      if (2 * mu_j <= part) continue;
      const Part mu_i = part - mu_j;
      if (mu_i >= 1 && is_missing[static_cast<std::size_t>(mu_i)]) {
        RefinabilityVerdict v;
        v.unrefinable = false;
        v.witness = Witness{mu_i, mu_j, part};
        return v;
      }
    }
  }
  return RefinabilityVerdict{true, std::nullopt, std::nullopt};
}

RefinabilityVerdict is_unrefinable_geometric(const DistinctPartition& p) {
  const YoungDiagram y = kn_transform(NumericalSet::from_partition(p));
  const HookGrid g = hook_grid(y);
  std::vector<char> in_first_col(static_cast<std::size_t>(p.largest() + 1), 0);
  for (const auto& row : g.hooks) in_first_col[static_cast<std::size_t>(row.front())] = 1;
  std::vector<OffendingCell> offending;
  for (int i = 1; i <= y.row_count(); ++i) {
    const Part head = g.at(i, 1);
    for (Part j = 2; j <= y.rows()[static_cast<std::size_t>(i - 1)]; ++j) {
      const Part h = g.at(i, j);
      if (in_first_col[static_cast<std::size_t>(h)]) continue;
      if (head == 2 * h) continue;
      offending.push_back(OffendingCell{i, j, h});
    }
  }
  RefinabilityVerdict v;
  v.unrefinable = offending.empty();
  if (!v.unrefinable) v.offending = std::move(offending);
  return v;
}

bool quick_unrefinable(std::span<const Part> parts, std::vector<char>& scratch) {
  const Part largest = parts.back();
  scratch.assign(static_cast<std::size_t>(largest + 1), 0);
  for (Part p : parts) scratch[static_cast<std::size_t>(p)] = 1;
  // scan missing pairs (mu_i < mu_j), cheapest first
  for (Part mu_i = 1; 2 * mu_i < largest; ++mu_i) {
    if (scratch[static_cast<std::size_t>(mu_i)]) continue;
    for (Part mu_j = mu_i + 1; mu_i + mu_j <= largest; ++mu_j) {
      if (scratch[static_cast<std::size_t>(mu_j)]) continue;
      if (scratch[static_cast<std::size_t>(mu_i + mu_j)]) return false;
    }
  }
  return true;
}

AgreeResult verdicts_agree(Part N, int jobs) {
  jobs = resolve_jobs(jobs);
  const PartFilter proper{2, std::nullopt, Parity::Any};

  // one bucket per smallest part, workers own buckets round-robin
  std::vector<std::optional<DistinctPartition>> bucket_divergence(
      static_cast<std::size_t>(N + 1));
  auto run_bucket = [&](Part first) {
    std::optional<DistinctPartition>& slot = bucket_divergence[static_cast<std::size_t>(first)];
    enumerate_distinct(N, proper, first, first, [&](std::span<const Part> parts) {
      const auto p = DistinctPartition::make({parts.begin(), parts.end()});
      if (is_unrefinable_definitional(p).unrefinable !=
          is_unrefinable_geometric(p).unrefinable) {
        slot = p;
        return false;  // first divergence within the bucket
      }
      return true;
    });
  };

  if (jobs <= 1) {
    for (Part first = 1; first <= N; ++first) run_bucket(first);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (Part first = 1 + w; first <= N; first += jobs) run_bucket(first);
      });
    }
    for (auto& t : workers) t.join();
  }

  for (Part first = 1; first <= N; ++first) {
    if (bucket_divergence[static_cast<std::size_t>(first)]) {
      return AgreeResult{false, bucket_divergence[static_cast<std::size_t>(first)]};
    }
  }
  return AgreeResult{};
}

}  // namespace unref

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maximal.hpp"

using namespace unref;

namespace {

DistinctPartition dp(std::vector<Part> parts) { return DistinctPartition::make(std::move(parts)); }

}  // namespace

TEST_CASE("largest-part bound table") {
  CHECK(lambda_t_bound(15, 0).bound == 26);
  CHECK(lambda_t_bound(15, 0).regime == BoundRegime::Triangular);
  CHECK(lambda_t_bound(15, 9).bound == 25);  // n-d even
  CHECK(lambda_t_bound(15, 9).regime == BoundRegime::GeneralEven);
  CHECK(lambda_t_bound(15, 8).bound == 26);  // n-d odd
  CHECK(lambda_t_bound(15, 8).regime == BoundRegime::GeneralOdd);
  CHECK(lambda_t_bound(15, 1).bound == 28);
  CHECK(lambda_t_bound(15, 2).bound == 27);
  CHECK(lambda_t_bound(15, 3).bound == 26);
  CHECK(lambda_t_bound(15, 3).regime == BoundRegime::D3);
  CHECK_THROWS_AS(lambda_t_bound(5, 0), Error);
  CHECK_THROWS_AS(lambda_t_bound(8, 8), Error);
}

TEST_CASE("unrefinable stream contains the worked partitions") {
  bool found = false;
  enumerate_unrefinable(22, [&](std::span<const Part> parts) {
    if (std::vector<Part>(parts.begin(), parts.end()) == std::vector<Part>{1, 2, 5, 6, 8})
      found = true;
    return true;
  });
  CHECK(found);

  const std::vector<Part> main_example{1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 16, 17, 26};
  found = false;
  enumerate_unrefinable(120, [&](std::span<const Part> parts) {
    if (std::vector<Part>(parts.begin(), parts.end()) == main_example) {
      found = true;
      return false;
    }
    return true;
  });
  CHECK(found);

  Part tiny = 0;
  enumerate_unrefinable(2, [&](std::span<const Part>) { return ++tiny, true; });
  CHECK(tiny == 0);
}

TEST_CASE("counts are stable across job counts") {
  for (Part n : {20, 33, 40}) {
    const Part serial = count_unrefinable(n, 1);
    CHECK(serial == count_unrefinable(n, 4));
    CHECK(collect_unrefinable(n, 1) == collect_unrefinable(n, 4));
  }
}

TEST_CASE("maximal unrefinable partitions of the small triangular weights") {
  CHECK(maximal_unrefinable(36) == std::vector<DistinctPartition>{dp({1, 2, 3, 4, 5, 9, 12})});
  CHECK(maximal_unrefinable(28).size() == 1);
  CHECK(maximal_unrefinable(120).size() == 5);
  CHECK(maximal_unrefinable(66).size() == 4);  // k = 6: the degenerate exclusion
  CHECK_THROWS_AS(maximal_unrefinable(2), Error);
}

TEST_CASE("max-missing subfamily") {
  const auto mup15 = maximal_unrefinable(120);
  const auto ubar15 = max_missing_subfamily(mup15);
  CHECK(ubar15.size() == 4);
  const auto pi15 = exceptional(ExceptionalKind::Pi, 15).partition;
  CHECK(std::find(ubar15.begin(), ubar15.end(), pi15) == ubar15.end());
  CHECK(std::find(mup15.begin(), mup15.end(), pi15) != mup15.end());

  CHECK(max_missing_subfamily(maximal_unrefinable(36)).empty());

  const auto mup_nt5 = maximal_unrefinable(111);
  CHECK(max_missing_subfamily(mup_nt5) == mup_nt5);  // d = 9, no tau here

  CHECK_THROWS_AS(max_missing_subfamily({dp({1, 4}), dp({2, 6})}), Error);
}

TEST_CASE("optimized layer search agrees with the naive path") {
  for (Part weight : {17, 23, 28, 36, 45, 51, 52, 55, 62, 66, 74, 78, 91, 111, 112}) {
    const auto naive = maximal_unrefinable(weight, SearchMode::Naive);
    const auto optimized = maximal_unrefinable(weight, SearchMode::Optimized);
    REQUIRE(naive == optimized);
  }
}

TEST_CASE("optimized mode reaches past the exhaustive cap") {
  const auto mup17 = maximal_unrefinable(153, SearchMode::Optimized);
  CHECK(mup17.size() == 7);  // |D_9| = 7: six survivors of the exclusion, plus pi
  for (const auto& p : mup17) CHECK(p.largest() == 30);
  const auto ubar = max_missing_subfamily(mup17);
  CHECK(ubar.size() == 6);
}

TEST_CASE("exceptional patterns") {
  const auto pi = exceptional(ExceptionalKind::Pi, 15);
  CHECK(pi.partition ==
        dp({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 26}));
  CHECK(pi.partition.weight() == 120);

  const auto zeta = exceptional(ExceptionalKind::Zeta, 19, 6);
  CHECK(zeta.partition ==
        dp({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 23, 34}));
  CHECK(zeta.partition.weight() == 182);

  const auto tau = exceptional(ExceptionalKind::Tau, 15);
  CHECK(tau.partition == dp({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 25}));
  CHECK(tau.partition.weight() == 116);

  const auto sigma = exceptional(ExceptionalKind::Sigma, 10);
  CHECK(sigma.partition == dp({1, 2, 3, 4, 5, 6, 7, 8, 16}));
  CHECK(sigma.partition.weight() == 52);
}

TEST_CASE("exceptional pattern collisions") {
  CHECK_THROWS_AS(exceptional(ExceptionalKind::Pi, 5), Error);
  CHECK_THROWS_AS(exceptional(ExceptionalKind::Zeta, 10, 8), Error);  // n-2+k = 2n-4
  CHECK_THROWS_AS(exceptional(ExceptionalKind::Zeta, 10, std::nullopt), Error);
  try {
    exceptional(ExceptionalKind::Zeta, 10, 8);
  } catch (const Error& e) {
    CHECK(e.status() == Status::PatternCollision);
  }
}

TEST_CASE("pi is the unique maximal partition for even n") {
  for (Part n : {8, 10, 12}) {
    const auto mup = maximal_unrefinable(triangular_number(n));
    REQUIRE(mup.size() == 1);
    CHECK(mup.front() == exceptional(ExceptionalKind::Pi, n).partition);
  }
}

TEST_CASE("complementation structure on the max-missing family") {
  // even largest part: lambda_t/2 absent and x <-> lambda_t - x alternate
  for (Part weight : {66, 91, 112, 120}) {
    for (const auto& p : max_missing_ubar(weight)) {
      const Part lt = p.largest();
      REQUIRE(lt % 2 == 0);
      CHECK_FALSE(p.contains(lt / 2));
      for (Part x = 1; x < lt; ++x)
        if (x != lt / 2) CHECK(p.contains(x) != p.contains(lt - x));
    }
  }
  // odd largest part: no middle exception at all
  for (Part weight : {51, 111}) {
    for (const auto& p : max_missing_ubar(weight)) {
      const Part lt = p.largest();
      REQUIRE(lt % 2 == 1);
      for (Part x = 1; x < lt; ++x) CHECK(p.contains(x) != p.contains(lt - x));
    }
  }
}

TEST_CASE("maximum largest part equals the table bound from n = 6 on") {
  for (Part weight = triangular_number(5) + 1; weight <= 80; ++weight) {
    const auto dec = triangular_decompose(weight);
    if (dec.n < 6) continue;
    const auto mup = maximal_unrefinable(weight);
    CHECK(mup.front().largest() == lambda_t_bound(dec.n, dec.d).bound);
  }
}

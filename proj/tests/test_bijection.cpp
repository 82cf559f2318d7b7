#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bijection.hpp"

using namespace unref;

namespace {

DistinctPartition dp(std::vector<Part> parts) { return DistinctPartition::make(std::move(parts)); }

const DistinctPartition kMainExample =
    dp({1, 2, 3, 4, 5, 6, 7, 8, 11, 14, 16, 17, 26});          // weight 120
const DistinctPartition kNt5Example =
    dp({1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 14, 15, 25});           // weight 111
const DistinctPartition kZeta19 =
    dp({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 15, 16, 23, 34});  // weight 182

}  // namespace

TEST_CASE("classify the worked partitions") {
  auto c = classify(kMainExample);
  CHECK(c.kind == CaseKind::Triangular);
  CHECK(c.n == 15);
  CHECK(c.k == 8);
  CHECK(c.weight() == 120);

  c = classify(kNt5Example);
  CHECK(c.kind == CaseKind::NT5);
  CHECK(c.n == 15);
  CHECK(c.k == 3);
  CHECK(c.d() == 9);

  c = classify(kZeta19);
  CHECK(c.kind == CaseKind::NT4);
  CHECK(c.n == 19);
  CHECK(c.k == 6);
  CHECK(c.d() == 8);
}

TEST_CASE("classify rejects the shapes without a case") {
  CHECK_THROWS_AS(classify(dp({1, 2, 3, 4, 5, 9, 12})), Error);  // T_8, n even
  CHECK_THROWS_AS(classify(dp({1, 2, 3, 4, 10})), Error);        // weight 20 = T_6 - 1
  try {
    classify(dp({1, 2, 3, 4, 5, 9, 12}));
  } catch (const Error& e) {
    CHECK(e.status() == Status::Unclassifiable);
  }
}

TEST_CASE("forward images of the worked partitions") {
  const auto eta = forward(kMainExample, BijectionCase::triangular(15));
  CHECK(eta.partition == dp({1, 3, 4}));
  CHECK_FALSE(eta.improper);

  const auto eta5 = forward(kNt5Example, BijectionCase::nt5(15, 3));
  CHECK(eta5.partition == dp({3, 5}));
  CHECK_FALSE(eta5.improper);

  const auto etaz = forward(kZeta19, BijectionCase::nt4(19, 6));
  CHECK(etaz.partition == dp({6}));
  CHECK(etaz.improper);
}

TEST_CASE("forward rejects shapes outside the case") {
  CHECK_THROWS_AS(forward(dp({1, 2, 5, 6, 8}), BijectionCase::triangular(15)), Error);
  try {
    forward(dp({1, 2, 5, 6, 8}), BijectionCase::triangular(15));
  } catch (const Error& e) {
    CHECK(e.status() == Status::ShapeMismatch);
  }
}

TEST_CASE("backward constructions from the worked etas") {
  CHECK(backward(dp({1, 3, 4}), BijectionCase::triangular(15)) == kMainExample);
  CHECK(backward(dp({3, 5}), BijectionCase::nt5(15, 3)) == kNt5Example);
  CHECK(backward(dp({2, 6}), BijectionCase::triangular(15)) ==
        dp({1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 19, 26}));
  CHECK(backward(dp({2, 6}), BijectionCase::triangular(15)).weight() == 120);
}

TEST_CASE("backward refuses the excluded etas and foreign etas") {
  try {
    backward(dp({3, 5}), BijectionCase::triangular(15));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::ExcludedEta);
  }
  try {
    backward(dp({1, 7}), BijectionCase::nt5(10, 3));  // 2k = n-4 here
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.status() == Status::ExcludedEta);
  }
  // eta not in the target family at all
  CHECK_THROWS_AS(backward(dp({2, 5}), BijectionCase::triangular(15)), Error);
  CHECK_THROWS_AS(backward(dp({2, 4}), BijectionCase::nt5(15, 3)), Error);  // even parts
  CHECK_THROWS_AS(backward(dp({8}), BijectionCase::triangular(15)), Error);  // improper
}

TEST_CASE("excluded eta sets") {
  CHECK(BijectionCase::triangular(15).excluded_eta() ==
        std::vector<DistinctPartition>{dp({3, 5})});
  CHECK(BijectionCase::triangular(7).excluded_eta() ==
        std::vector<DistinctPartition>{dp({1, 3})});
  CHECK(BijectionCase::triangular(9).excluded_eta() ==
        std::vector<DistinctPartition>{dp({2, 3})});
  // k = 6: (3, 3) is no distinct pair, nothing to exclude
  CHECK(BijectionCase::triangular(11).excluded_eta().empty());
  CHECK(BijectionCase::nt5(10, 3).excluded_eta() ==
        std::vector<DistinctPartition>{dp({1, 7})});
  CHECK(BijectionCase::nt5(15, 3).excluded_eta().empty());
  CHECK(BijectionCase::nt4(15, 4).excluded_eta().empty());
}

TEST_CASE("exclusion demonstrations") {
  const auto tri = demonstrate_exclusion(BijectionCase::triangular(15));
  REQUIRE(tri.size() == 1);
  CHECK(tri[0].eta == dp({3, 5}));
  CHECK(tri[0].lambda == dp({1, 2, 3, 4, 5, 6, 7, 9, 11, 12, 16, 18, 26}));
  CHECK(tri[0].definitional_refinable);
  REQUIRE(!tri[0].offending.empty());
  CHECK(tri[0].offending[0] == OffendingCell{2, 2, 10});
  CHECK(tri[0].offending[1] == OffendingCell{2, 3, 8});

  const auto nt5 = demonstrate_exclusion(BijectionCase::nt5(10, 3));
  REQUIRE(nt5.size() == 1);
  CHECK(nt5[0].eta == dp({1, 7}));
  CHECK(nt5[0].definitional_refinable);
  CHECK(!nt5[0].offending.empty());

  // k = 4: the excluded pair (1,3) genuinely needs excluding
  const auto small = demonstrate_exclusion(BijectionCase::triangular(7));
  REQUIRE(small.size() == 1);
  CHECK(small[0].lambda == dp({1, 3, 6, 8, 10}));
  CHECK(small[0].definitional_refinable);

  CHECK_THROWS_AS(demonstrate_exclusion(BijectionCase::triangular(11)), Error);
}

TEST_CASE("verify the three pinned instances") {
  for (const auto& bcase : {BijectionCase::triangular(15), BijectionCase::nt5(15, 3),
                            BijectionCase::nt4(15, 4)}) {
    const auto report = verify_bijection(bcase);
    CHECK(report.pass());
  }
  const auto tri = verify_bijection(BijectionCase::triangular(15));
  CHECK(tri.mup_size == 5);
  CHECK(tri.ubar_size == 4);
  const auto nt5 = verify_bijection(BijectionCase::nt5(15, 3));
  CHECK(nt5.mup_size == 2);
  const auto nt4 = verify_bijection(BijectionCase::nt4(15, 4));
  CHECK(nt4.mup_size == 2);
  CHECK(nt4.improper_images == 1);
}

TEST_CASE("verify the degenerate-exclusion instance") {
  // k = 6: the bijection is onto the whole of D_6 and pi still stands apart
  const auto report = verify_bijection(BijectionCase::triangular(11));
  CHECK(report.pass());
  CHECK(report.family_size == 3);
  CHECK(report.excluded_size == 0);
  CHECK(report.ubar_size == 3);
  CHECK(report.mup_size == 4);
}

TEST_CASE("roundtrips across every instance up to the exhaustive cap") {
  for (const auto& bcase : bijection_instances(kExhaustiveCap, 6)) {
    const auto report = verify_bijection(bcase, SearchMode::Naive, 2);
    INFO(case_name(bcase.kind), " n=", bcase.n, " k=", bcase.k);
    for (const auto& check : report.checks) {
      INFO(check.name, " ", check.detail);
      REQUIRE(check.pass);
    }
  }
}

TEST_CASE("instance grid shape") {
  const auto grid = bijection_instances(153, 6);
  CHECK(grid.size() == 68);
  Part tri = 0, nt5 = 0, nt4 = 0;
  for (const auto& bcase : grid) {
    CHECK(bcase.weight() <= 153);
    switch (bcase.kind) {
      case CaseKind::Triangular: ++tri; break;
      case CaseKind::NT5: ++nt5; break;
      case CaseKind::NT4: ++nt4; break;
    }
  }
  CHECK(tri == 6);
  CHECK(nt5 == 42);
  CHECK(nt4 == 20);
}

TEST_CASE("backward outputs satisfy the structural corollaries") {
  for (const auto& bcase :
       {BijectionCase::triangular(13), BijectionCase::nt5(14, 4), BijectionCase::nt4(13, 5)}) {
    for (const auto& eta : target_family(bcase)) {
      bool excluded = false;
      for (const auto& ex : bcase.excluded_eta()) excluded |= ex == eta;
      if (excluded) continue;
      const auto lam = backward(eta, bcase);
      CHECK(static_cast<Part>(lam.size()) == bcase.n - 2);
      CHECK(lam.largest() == bcase.lambda_t());
      CHECK(lam.missing_count() ==
            (bcase.kind == CaseKind::NT5 ? bcase.n - 3 : bcase.n - 2));
      // n-2 is never a part of an even-bound output
      if (bcase.kind != CaseKind::NT5) CHECK_FALSE(lam.contains(bcase.n - 2));
    }
  }
}

TEST_CASE("case parameter validation") {
  CHECK_THROWS_AS(BijectionCase::triangular(8), Error);
  CHECK_THROWS_AS(BijectionCase::nt5(10, 4), Error);  // 2k > n-4
  CHECK_THROWS_AS(BijectionCase::nt4(10, 3), Error);  // 2k < 8
  CHECK_THROWS_AS(BijectionCase::nt4(9, 4), Error);   // 2k > n-2
}

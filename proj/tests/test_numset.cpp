#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numeric_set.hpp"
#include "refinability.hpp"

using namespace unref;

TEST_CASE("from_partition carries gaps, Frobenius, genus, multiplicity") {
  const auto s = NumericalSet::from_partition(DistinctPartition::make({1, 2, 5, 6, 8}));
  CHECK(s.gaps() == std::vector<Part>{1, 2, 5, 6, 8});
  CHECK(s.frobenius() == 8);
  CHECK(s.genus() == 5);
  CHECK(s.multiplicity() == 3);
  CHECK(s.format() == "0,3,4,7,9,->");

  const auto s2 = NumericalSet::from_partition(DistinctPartition::make({1, 2, 4, 5, 7, 10, 13}));
  CHECK(s2.format() == "0,3,6,8,9,11,12,14,->");

  const auto s3 = NumericalSet::from_partition(DistinctPartition::make({1}));
  CHECK(s3.frobenius() == 1);
  CHECK(s3.genus() == 1);
  CHECK(s3.multiplicity() == 2);
  CHECK(s3.format() == "0,2,->");

  // no missing part below the largest: multiplicity jumps past the gaps
  const auto s4 = NumericalSet::from_partition(DistinctPartition::make({1, 2, 3}));
  CHECK(s4.multiplicity() == 4);
}

TEST_CASE("small_elements") {
  const auto s = NumericalSet::from_partition(DistinctPartition::make({1, 2, 5, 6, 8}));
  CHECK(s.small_elements(8) == std::vector<Part>{0, 3, 4, 7});
  const auto ex = NumericalSet::parse("0,3,6,8,9,11,12,14,->");
  CHECK(ex.small_elements(13) == std::vector<Part>{0, 3, 6, 8, 9, 11, 12});
  CHECK(ex.small_elements(0) == std::vector<Part>{0});
  CHECK_THROWS_AS(ex.small_elements(-1), Error);
}

TEST_CASE("closure test with witness") {
  const auto s = NumericalSet::from_partition(DistinctPartition::make({1, 2, 5, 6, 8}));
  const auto r = s.closure();
  CHECK_FALSE(r.closed);
  CHECK(r.witness_a == 3);
  CHECK(r.witness_b == 3);
  CHECK(!s.contains(r.witness_a + r.witness_b));

  CHECK(NumericalSet::from_gaps({1, 2, 3, 6, 7, 11}).is_semigroup());
  CHECK(NumericalSet::from_gaps({}).is_semigroup());
}

TEST_CASE("parse and format") {
  const auto s = NumericalSet::parse("0,3,4,7,9,->");
  CHECK(s.gaps() == std::vector<Part>{1, 2, 5, 6, 8});
  CHECK(NumericalSet::parse("0, 3, 4, 7, 9, ->").gaps() == s.gaps());
  CHECK(NumericalSet::parse("0,->").gaps().empty());
  CHECK(NumericalSet::from_gaps({}).format() == "0,1,->");
  CHECK(NumericalSet::parse(NumericalSet::from_gaps({}).format()).gaps().empty());
  CHECK_THROWS_AS(NumericalSet::parse("3,4,->"), Error);
  CHECK_THROWS_AS(NumericalSet::parse("0,3,4"), Error);
  CHECK_THROWS_AS(NumericalSet::parse("0,4,3,->"), Error);
  CHECK_THROWS_AS(NumericalSet::parse("0,x,->"), Error);
}

TEST_CASE("partition <-> gap set is the identity on parts") {
  for (Part n = 3; n <= 30; n += 9) {
    enumerate_distinct(n, PartFilter{}, [&](std::span<const Part> parts) {
      const auto p = DistinctPartition::make({parts.begin(), parts.end()});
      const auto s = NumericalSet::from_partition(p);
      CHECK(s.to_partition() == p);
      CHECK(s.genus() == p.size());
      CHECK(s.frobenius() == p.largest());
      return true;
    });
  }
}

TEST_CASE("semigroup gaps are unrefinable, converse fails") {
  // exhaustive over gap sets with Frobenius <= 12
  Part semigroups = 0;
  std::vector<char> scratch;
  for (std::uint32_t mask = 1; mask < (1u << 12); ++mask) {
    std::vector<Part> gaps;
    for (Part b = 0; b < 12; ++b)
      if (mask & (1u << b)) gaps.push_back(b + 1);
    const auto s = NumericalSet::from_gaps(gaps);
    if (!s.is_semigroup()) continue;
    ++semigroups;
    CHECK(quick_unrefinable(gaps, scratch));
  }
  CHECK(semigroups > 100);

  // (1,2,5,6,8) is unrefinable yet its set is not closed
  const auto p = DistinctPartition::make({1, 2, 5, 6, 8});
  CHECK(is_unrefinable_definitional(p).unrefinable);
  CHECK_FALSE(NumericalSet::from_partition(p).is_semigroup());
}

TEST_CASE("no-gap partition errors") {
  CHECK_THROWS_AS(NumericalSet::from_gaps({}).to_partition(), Error);
  try {
    NumericalSet::from_gaps({}).to_partition();
  } catch (const Error& e) {
    CHECK(e.status() == Status::NoGaps);
  }
}

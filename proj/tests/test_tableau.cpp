#include "oracles.hpp"
#include "taquin/tableau.hpp"

#include <doctest.h>

#include <set>

using namespace taquin;

TEST_SUITE("tableaux") {
  TEST_CASE("parse and print") {
    const Tableau t = parse_tableau("1 2 5 9 11\n3 7 10\n4 8 13\n6 12\n");
    CHECK(t.outer() == Partition{5, 3, 3, 2});
    CHECK(validate(t));
    CHECK(to_string(t) == "1 2 5 9 11 / 3 7 10 / 4 8 13 / 6 12");
    CHECK(parse_tableau(to_string(t)) == t);
    CHECK(t.at({2, 2}) == 13);
    CHECK(t.at({4, 1}) == 0);
    CHECK(t.find(13) == Cell{2, 2});
  }

  TEST_CASE("skew tableau text") {
    const SkewShape s = SkewShape::parse("3,2/1");
    const Tableau t = parse_tableau("1 3 / 2 4", s);
    CHECK(validate(t));
    CHECK(to_string(t) == "1 3 / 2 4");
    CHECK_THROWS_AS(parse_tableau("1 2 3 / 4", s), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau("1 x", std::nullopt), std::invalid_argument);
  }

  TEST_CASE("increasing conditions") {
    CHECK_FALSE(validate(parse_tableau("2 1")));
    CHECK(validate(parse_tableau("1 3 / 2 4 / 5")));
    CHECK_FALSE(validate(parse_tableau("1 2 / 3 2")));
    CHECK_FALSE(validate(parse_tableau("1 2 / 4")));
    CHECK(is_increasing(parse_tableau("1 2 / 4")));
  }

  TEST_CASE("f^λ matches the hook length formula") {
    for (const Partition& p : testing::partitions_up_to_size(9))
      CHECK(count_standard(p) == testing::hook_length_count(p));
  }

  TEST_CASE("f^{λ/μ} matches the Aitken determinant in both orders") {
    for (const Partition& outer : testing::partitions_up_to_size(8))
      for (const Partition& inner : testing::partitions_up_to_size(4)) {
        const BigInt expected = testing::aitken_count(outer, inner);
        CHECK(count_skew(outer, inner, EnumerationOrder::forward) == expected);
        CHECK(count_skew(outer, inner, EnumerationOrder::reverse) == expected);
      }
    CHECK(count_skew(Partition{2}, Partition{1, 1}) == 0);
  }

  TEST_CASE("streams visit each tableau once") {
    for (const auto order : {EnumerationOrder::forward, EnumerationOrder::reverse}) {
      SkewTableauStream stream = enumerate_skew(SkewShape::parse("4,3,2/2,1"), order);
      std::set<Tableau> seen;
      while (auto t = stream.next()) {
        CHECK(validate(*t));
        seen.insert(*t);
      }
      CHECK(BigInt(seen.size()) == testing::aitken_count(Partition{4, 3, 2}, Partition{2, 1}));
    }
  }

  TEST_CASE("empty shape has one filling") {
    SkewTableauStream stream = enumerate_standard(Partition{});
    CHECK(stream.next().has_value());
    CHECK_FALSE(stream.next().has_value());
    CHECK(count_skew(Partition{2, 1}, Partition{2, 1}) == 1);
  }
}

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace taquin;

TEST_SUITE("core") {
  TEST_CASE("falling factorial and binomial") {
    CHECK(falling_factorial(5, 0) == 1);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 4) == 0);
    CHECK(falling_factorial(30, 30) == BigInt("265252859812191058636308480000000"));
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(6, 7) == 0);
  }

  TEST_CASE("rational text") {
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  }

  TEST_CASE("partition parsing and printing") {
    CHECK(Partition::parse("5,3,3,2") == Partition{5, 3, 3, 2});
    CHECK(Partition::parse("0").empty());
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK(Partition{}.to_string() == "0");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,-1"), std::invalid_argument);
    const Partition p{4, 2, 2, 1};
    CHECK(p.size() == 9);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.distinct_parts() == 3);
  }

  TEST_CASE("skew shapes") {
    const SkewShape s = SkewShape::parse("5,3,3,2/3,2");
    CHECK(s.size() == 8);
    CHECK(s.to_string() == "5,3,3,2/3,2");
    CHECK(s.contains_cell({3, 0}));
    CHECK_FALSE(s.contains_cell({2, 0}));
    CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
  }

  TEST_CASE("contents and conjugate") {
    CHECK(content_multiset(Partition{2, 1}) == std::vector<int>{-1, 0, 1});
    CHECK(conjugate(Partition{5, 3, 3, 2}) == Partition{4, 4, 3, 1, 1});
    for (const Partition& p : testing::partitions_up_to_size(8)) CHECK(conjugate(conjugate(p)) == p);
  }

  TEST_CASE("adding and removing cells") {
    CHECK(add_cell_set(Partition{2, 1}) == std::vector<Partition>{Partition{2, 1, 1}, Partition{2, 2}, Partition{3, 1}});
    CHECK(remove_cell_set(Partition{2, 1}) == std::vector<Partition>{Partition{1, 1}, Partition{2}});
    CHECK(add_cell_set(Partition{}) == std::vector<Partition>{Partition{1}});
    CHECK(addable_cells(Partition{1}, Partition{2, 1}) == std::vector<Cell>{{1, 0}, {0, 1}});
    for (const Partition& p : testing::partitions_up_to_size(7)) {
      for (const Cell& c : removable_cells(p)) CHECK(add_cell(remove_cell(p, c), c) == p);
      CHECK(add_cell_set(p).size() == removable_cells(p).size() + 1);
    }
  }

  TEST_CASE("partitions of n") {
    const std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 1; n <= 10; ++n) CHECK(partitions_of(n).size() == std::size_t(counts[n]));
    const auto four = partitions_of(4);
    CHECK(four.front() == Partition{4});
    CHECK(four.back() == Partition{1, 1, 1, 1});
    CHECK(std::is_sorted(four.rbegin(), four.rend()));
  }

  TEST_CASE("merge, pad and containment") {
    CHECK(merge(Partition{3, 1}, Partition{2, 1}) == Partition{3, 2, 1, 1});
    CHECK(pad_with_ones(Partition{2}, 4) == Partition{2, 1, 1});
    CHECK(contains(Partition{3, 2}, Partition{3, 1}));
    CHECK_FALSE(contains(Partition{3, 2}, Partition{1, 1, 1}));
  }
}

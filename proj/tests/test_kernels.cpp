#include "oracles.hpp"
#include "taquin/kernels.hpp"
#include "taquin/sampling.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace taquin;

TEST_SUITE("kernels") {
  TEST_CASE("serial and parallel kernels agree") {
    const std::vector<Partition> outers = testing::partitions_up_to_size(8);
    const std::vector<Partition> inners = testing::partitions_up_to_size(3);
    const auto serial = skew_count_table(outers, inners, Execution::serial);
    CHECK(serial == skew_count_table(outers, inners, Execution::parallel));
    for (std::size_t i = 0; i < outers.size(); ++i)
      for (std::size_t j = 0; j < inners.size(); ++j)
        CHECK(serial[i][j] == testing::aitken_count(outers[i], inners[j]));

    std::vector<Tableau> tableaux;
    for (const Partition& p : partitions_of(6)) for_each_standard_tableau(p, [&](const Tableau& t) { tableaux.push_back(t); });
    CHECK(inner_shape_histograms(tableaux, 2, Execution::serial) ==
          inner_shape_histograms(tableaux, 2, Execution::parallel));

    const auto cases = exhaustive_slide_cases(5, 2);
    const CheckSummary a = check_round_trips(cases, Execution::serial);
    const CheckSummary b = check_round_trips(cases, Execution::parallel);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == 0);
    CHECK(b.failures == 0);
  }

  TEST_CASE("tuples in lexicographic order") {
    std::vector<std::vector<int>> seen;
    for_each_tuple(3, 2, [&](const std::vector<int>& t) { seen.push_back(t); });
    CHECK(seen == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}});
    std::size_t count = 0;
    for_each_tuple(4, 0, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 1);
  }

  TEST_CASE("exhaustive case counts") {
    std::size_t expected = 0;
    for (const Partition& p : testing::partitions_up_to_size(4))
      expected += std::size_t(testing::hook_length_count(p)) * std::size_t(p.size());
    CHECK(exhaustive_separation_cases(4).size() == expected);
  }
}

TEST_SUITE("sampling") {
  TEST_CASE("samplers produce valid objects") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      const Partition p = random_partition(1 + int(rng() % 10), rng);
      CHECK(validate(random_standard_tableau(p, rng)));
      const Partition inner = random_subpartition(p, rng);
      CHECK(contains(p, inner));
      CHECK(validate(random_skew_tableau(SkewShape(p, inner), rng)));
      const std::vector<int> t = random_tuple(p.size(), int(rng() % (p.size() + 1)), rng);
      CHECK(std::set<int>(t.begin(), t.end()).size() == t.size());
    }
  }

  TEST_CASE("hook walk is uniform") {
    // 16 tableaux of shape (3,2,1); 8000 draws, chi-square with 15 degrees of
    // freedom below 37.7 (p = 0.001).
    Rng rng(5);
    std::map<Tableau, int> counts;
    const int draws = 8000;
    for (int i = 0; i < draws; ++i) ++counts[random_standard_tableau(Partition{3, 2, 1}, rng)];
    REQUIRE(counts.size() == 16);
    double chi2 = 0;
    for (const auto& [t, c] : counts) chi2 += (c - draws / 16.0) * (c - draws / 16.0) / (draws / 16.0);
    CHECK(chi2 < 37.7);
  }

  TEST_CASE("random partitions are uniform") {
    // p(5) = 7; 7000 draws, chi-square with 6 degrees of freedom below 22.5.
    Rng rng(6);
    std::map<Partition, int> counts;
    for (int i = 0; i < 7000; ++i) ++counts[random_partition(5, rng)];
    REQUIRE(counts.size() == 7);
    double chi2 = 0;
    for (const auto& [p, c] : counts) chi2 += (c - 1000.0) * (c - 1000.0) / 1000.0;
    CHECK(chi2 < 22.5);
  }
}

#include "oracles.hpp"
#include "taquin/jeu_de_taquin.hpp"
#include "taquin/kernels.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace taquin;

namespace {

const Tableau kExample = parse_tableau("1 2 5 9 11 / 3 7 10 / 4 8 13 / 6 12");

}  // namespace

TEST_SUITE("jeu_de_taquin") {
  TEST_CASE("in-step prefers the larger inward neighbour") {
    const Tableau a = parse_tableau("1 3 / 2 4");
    CHECK(in_step_target(a, {1, 1}) == Cell{1, 0});
    const Tableau b = parse_tableau("1 2 / 3 4");
    CHECK(in_step_target(b, {1, 1}) == Cell{0, 1});
    CHECK(in_step_target(b, {1, 0}) == Cell{0, 0});
    CHECK(in_step_target(b, {0, 1}) == Cell{0, 0});
    CHECK_FALSE(in_step_target(b, {0, 0}).has_value());
  }

  TEST_CASE("out-step picks the smaller outward neighbour") {
    const Tableau t = parse_tableau("4 1 / 2 3");
    CHECK(out_step_target(t, {0, 0}) == Cell{1, 0});
    CHECK_FALSE(out_step_target(t, {1, 1}).has_value());
  }

  TEST_CASE("single steps invert each other") {
    const MarkedTableau start{parse_tableau("1 2 / 3 4"), {1, 1}};
    const MarkedTableau moved = in_step(start);
    CHECK(moved.mark == Cell{0, 1});
    CHECK(moved.tableau.at({0, 1}) == 4);
    CHECK(out_step(moved) == start);
    CHECK_THROWS_AS(in_step(MarkedTableau{start.tableau, {0, 0}}), std::logic_error);
  }

  TEST_CASE("the worked bijection example") {
    const std::vector<int> removed{12, 5};
    std::vector<std::vector<Cell>> paths;
    const BijectionImage image =
        bijection_forward(kExample, removed, [&](std::size_t, const SlideResult& s, const Tableau&) {
          paths.push_back(s.path);
        });
    CHECK(image.skew.shape() == SkewShape(Partition{5, 3, 3, 2}, Partition{2}));
    CHECK(to_string(image.skew) == "2 8 10 / 1 3 9 / 4 6 11 / 5 7");
    CHECK(to_string(image.exit_order) == "1 2");
    REQUIRE(paths.size() == 2);
    CHECK(paths[0] == std::vector<Cell>{{1, 3}, {1, 2}, {1, 1}, {0, 1}, {0, 0}});
    CHECK(paths[1] == std::vector<Cell>{{2, 0}, {1, 0}});
    const auto [back, back_removed] = bijection_backward(image);
    CHECK(back == kExample);
    CHECK(back_removed == removed);
    CHECK(exit_shape(kExample, removed) == Partition{2});
  }

  TEST_CASE("out_slide inverts in_slide") {
    for (const Partition& p : testing::partitions_up_to_size(6))
      for_each_standard_tableau(p, [&](const Tableau& t) {
        for (int e = 1; e <= t.size(); ++e) {
          const SlideResult in = in_slide(t, e);
          CHECK(in.tableau.at(in.path.back()) == e);
          CHECK(out_slide(in.tableau, in.path.back()).tableau == t);
        }
      });
  }

  TEST_CASE("for each tuple the fibres have size f^{λ/μ} f^μ") {
    for (const Partition& lambda : testing::partitions_up_to_size(6)) {
      std::vector<Tableau> tableaux;
      for_each_standard_tableau(lambda, [&](const Tableau& t) { tableaux.push_back(t); });
      for (int k = 1; k <= std::min(3, lambda.size()); ++k)
        for_each_tuple(lambda.size(), k, [&](const std::vector<int>& a) {
          std::map<Partition, long> counts;
          for (const Tableau& t : tableaux) ++counts[exit_shape(t, a)];
          for (const Partition& mu : partitions_of(k))
            CHECK(BigInt(counts[mu]) == testing::aitken_count(lambda, mu) * testing::hook_length_count(mu));
        });
    }
  }

  TEST_CASE("invalid input") {
    const std::vector<int> repeated{3, 3};
    CHECK_THROWS_AS(bijection_forward(kExample, repeated), std::invalid_argument);
    const std::vector<int> out_of_range{14};
    CHECK_THROWS_AS(bijection_forward(kExample, out_of_range), std::invalid_argument);
    CHECK_THROWS_AS(in_slide(kExample, 99), std::invalid_argument);
    BijectionImage bad{parse_tableau("1 2"), parse_tableau("1"), {1}};
    CHECK_THROWS_AS(bijection_backward(bad), std::invalid_argument);
  }

  TEST_CASE("removing nothing is the identity") {
    const BijectionImage image = bijection_forward(kExample, std::vector<int>{});
    CHECK(image.skew == kExample);
    CHECK(image.exit_order.size() == 0);
  }
}

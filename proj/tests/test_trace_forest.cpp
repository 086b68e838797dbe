#include "oracles.hpp"
#include "taquin/jeu_de_taquin.hpp"
#include "taquin/kernels.hpp"
#include "taquin/sampling.hpp"
#include "taquin/trace_forest.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace taquin;

TEST_SUITE("trace_forest") {
  TEST_CASE("standard tableaux grow a single tree") {
    for (const Partition& p : testing::partitions_up_to_size(6))
      for_each_standard_tableau(p, [&](const Tableau& t) {
        const TraceForest f = TraceForest::build(t);
        REQUIRE(f.roots() == std::vector<Cell>{{0, 0}});
        CHECK(f.subtree({0, 0}).size() == std::size_t(t.size()));
      });
  }

  TEST_CASE("root paths are slide paths") {
    for (const Partition& p : testing::partitions_up_to_size(6))
      for_each_standard_tableau(p, [&](const Tableau& t) {
        const TraceForest f = TraceForest::build(t);
        for (const Cell& c : cells(p)) CHECK(path_to_root(f, c) == in_slide(t, t.at(c)).path);
      });
  }

  TEST_CASE("children sit right of and above their parent") {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
      const Partition outer = random_partition(9, rng);
      const Tableau t = random_skew_tableau(SkewShape(outer, random_subpartition(outer, rng)), rng);
      const TraceForest f = TraceForest::build(t);
      std::size_t covered = 0;
      for (const Cell& r : f.roots()) covered += f.subtree(r).size();
      CHECK(covered == std::size_t(t.size()));
      for (const Cell& c : cells(t.shape()))
        if (const auto p = f.parent(c)) {
          CHECK((*p == c.left() || *p == c.below()));
          CHECK(f.horizontal_arc(c) == (*p == c.left()));
          CHECK((f.horizontal_arc(c) ? f.right_child(*p) : f.upper_child(*p)) == c);
          CHECK(f.in_subtree(f.root_of(c), c));
        }
    }
  }

  TEST_CASE("classification partitions the tree minus its root") {
    const Tableau t = parse_tableau("1 2 5 9 11 / 3 7 10 / 4 8 13 / 6 12");
    const TraceForest f = TraceForest::build(t);
    for (const Cell& c : cells(t.shape())) {
      if (c == Cell{0, 0}) continue;
      const CellClassification k = classify(f, {0, 0}, c);
      std::multiset<Cell> all;
      for (const auto* part : {&k.d1, &k.d2, &k.p1, &k.p2, &k.r, &k.a}) all.insert(part->begin(), part->end());
      CHECK(all.size() == std::size_t(t.size() - 1));
      CHECK(std::set<Cell>(all.begin(), all.end()).size() == all.size());
      CHECK(std::count(k.p1.begin(), k.p1.end(), c) + std::count(k.p2.begin(), k.p2.end(), c) == 1);
      CHECK(k.right_group().size() + k.upper_group().size() == std::size_t(t.size() - 1));
    }
    CHECK_THROWS_AS(classify(f, {0, 0}, {7, 7}), std::invalid_argument);
  }

  TEST_CASE("separation holds and is not vacuous") {
    const std::vector<SeparationCase> cases = exhaustive_separation_cases(6);
    std::size_t both_sides = 0;
    for (const SeparationCase& s : cases) {
      const TraceForest f = TraceForest::build(s.tableau);
      const CellClassification k = classify(f, f.root_of(s.cell), s.cell);
      if (!k.right_group().empty() && !k.upper_group().empty()) ++both_sides;
    }
    CHECK(check_separation(cases, Execution::serial).failures == 0);
    CHECK(both_sides > cases.size() / 4);
  }

  TEST_CASE("dot output") {
    const Tableau t = parse_tableau("1 3 / 2");
    const std::string dot = to_dot(TraceForest::build(t), t);
    CHECK(dot.rfind("digraph trace_forest", 0) == 0);
    CHECK(dot.find("\"c1_0\" -> \"c0_0\"") != std::string::npos);
    CHECK(dot.find("\"c0_1\" -> \"c0_0\"") != std::string::npos);
    CHECK(dot.find("(1,0): 3") != std::string::npos);
  }
}

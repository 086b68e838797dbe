#include "oracles.hpp"
#include "taquin/characters.hpp"

#include <doctest.h>

#include <algorithm>

using namespace taquin;

namespace {

BigInt centralizer(const Partition& mu) {
  BigInt z = 1;
  for (int i = 1; i <= mu.size(); ++i) {
    const int m = mu.multiplicity(i);
    for (int j = 0; j < m; ++j) z *= i;
    z *= falling_factorial(m, m);
  }
  return z;
}

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("ribbons") {
    CHECK(is_ribbon(SkewShape::parse("5,4,4/3,3,1")));
    CHECK(ribbon_height(SkewShape::parse("5,4,4/3,3,1")) == 2);
    CHECK_FALSE(is_ribbon(SkewShape::parse("2,2")));
    CHECK_FALSE(is_ribbon(SkewShape::parse("3,1/1")));
    CHECK_FALSE(is_ribbon(SkewShape::parse("2/2")));
    CHECK(is_ribbon(SkewShape::parse("1,1,1")));
    CHECK(ribbon_height(SkewShape::parse("1,1,1")) == 2);
    CHECK_THROWS_AS(ribbon_height(SkewShape::parse("2,2")), std::invalid_argument);
  }

  TEST_CASE("removable ribbons are hooks") {
    for (const Partition& p : testing::partitions_up_to_size(7))
      for (int size = 1; size <= p.size(); ++size)
        for (const RemovedRibbon& r : removable_ribbons(p, size)) {
          const SkewShape s(p, r.rest);
          CHECK(s.size() == size);
          CHECK(is_ribbon(s));
          CHECK(ribbon_height(s) == r.height);
        }
  }

  TEST_CASE("ribbon tableau with positive sign") {
    const auto all = enumerate_ribbon_tableaux(Partition{5, 3, 3, 2}, {5, 4, 2, 1, 1});
    CHECK(std::any_of(all.begin(), all.end(), [](const RibbonTableau& r) { return r.sign() == 1; }));
    for (const RibbonTableau& r : all) {
      REQUIRE(r.chain.size() == 6);
      CHECK(r.chain.front().empty());
      CHECK(r.chain.back() == Partition{5, 3, 3, 2});
    }
    BigInt total = 0;
    for (const RibbonTableau& r : all) total += r.sign();
    CHECK(total == chi_mn(Partition{5, 3, 3, 2}, Partition{5, 4, 2, 1, 1}));
    CHECK_THROWS_AS(enumerate_ribbon_tableaux(Partition{2, 1}, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_ribbon_tableaux(Partition{2, 1}, {3, 0}), std::invalid_argument);
  }

  TEST_CASE("known values") {
    CHECK(chi_mn(Partition{2, 1}, Partition{3}) == -1);
    CHECK(chi_mn(Partition{}, Partition{}) == 1);
    const std::vector<std::vector<int>> s4{
        {1, 1, 1, 1, 1}, {-1, 0, -1, 1, 3}, {0, -1, 2, 0, 2}, {1, 0, -1, -1, 3}, {-1, 1, 1, -1, 1}};
    const CharacterTable table = character_table(4);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(table.values[i][j] == s4[i][j]);
    CHECK_THROWS_AS(chi_mn(Partition{2, 1}, Partition{2}), std::invalid_argument);
  }

  TEST_CASE("degree, conjugation sign and orthogonality") {
    for (int n = 1; n <= 8; ++n) {
      const CharacterTable t = character_table(n);
      const std::size_t m = t.partitions.size();
      const std::size_t identity = m - 1;
      for (std::size_t i = 0; i < m; ++i) {
        CHECK(t.values[i][identity] == testing::hook_length_count(t.partitions[i]));
        const Partition conj = conjugate(t.partitions[i]);
        for (std::size_t j = 0; j < m; ++j) {
          const Partition& mu = t.partitions[j];
          const int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
          CHECK(chi_mn(conj, mu) == sign * t.values[i][j]);
        }
      }
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          BigInt sum = 0;
          for (std::size_t i = 0; i < m; ++i) sum += t.values[i][a] * t.values[i][b];
          CHECK(sum == (a == b ? centralizer(t.partitions[a]) : BigInt(0)));
        }
    }
  }

  TEST_CASE("character through skew counts") {
    const SkewCounter counter = enumeration_skew_counter();
    for (const Partition& lambda : testing::partitions_up_to_size(7))
      for (int k = 0; k <= lambda.size(); ++k)
        for (const Partition& mu : k == 0 ? std::vector<Partition>{Partition{}} : partitions_of(k)) {
          if (mu.multiplicity(1) > 0) continue;
          CHECK(chi_via_skew(lambda, mu, counter) == chi_mn(lambda, pad_with_ones(mu, lambda.size())));
        }
    const SkewCounter aitken = [](const Partition& o, const Partition& i) { return testing::aitken_count(o, i); };
    CHECK(chi_via_skew(Partition{4, 2, 1}, Partition{3, 2}, aitken) == chi_mn(Partition{4, 2, 1}, Partition{3, 2, 1, 1}));
    CHECK_THROWS_AS(chi_via_skew(Partition{2}, Partition{3}, counter), std::invalid_argument);
  }
}

#include "oracles.hpp"
#include "taquin/characters.hpp"
#include "taquin/derivation.hpp"

#include <doctest.h>

using namespace taquin;

namespace {

CpExpression cp(const Partition& alpha, Rational c = 1) { return CpExpression::monomial(alpha, c); }

// (n)_k f^{λ/μ} / f^λ computed from the determinant oracle.
Rational normalized_skew(const Partition& lambda, const Partition& mu) {
  return Rational(falling_factorial(lambda.size(), mu.size()) * testing::aitken_count(lambda, mu)) /
         Rational(testing::hook_length_count(lambda));
}

void check_against_oracle(const CpExpression& e, const Partition& mu, int n_max) {
  for (const Partition& lambda : testing::partitions_up_to_size(n_max))
    CHECK(eval_on_shape(e, lambda) == normalized_skew(lambda, mu));
}

}  // namespace

TEST_SUITE("derivation") {
  TEST_CASE("one-row inner shapes") {
    DerivationEngine engine;
    const auto g1 = engine.derive_hook(1);
    REQUIRE(g1);
    CHECK(g1.value().closed_form == cp(Partition{1}));
    const auto g2 = engine.derive_hook(2);
    REQUIRE(g2);
    CHECK(g2.value().closed_form == cp(Partition{1, 1}, Rational(1, 2)) + cp(Partition{2}) - cp(Partition{1}, Rational(1, 2)));
    CHECK(to_string(g2.value().delta) == "<^(1)∨^(1) + 2 <^(1)");
    for (int k = 1; k <= 5; ++k) {
      const auto g = engine.derive_hook(k);
      REQUIRE(g);
      check_against_oracle(g.value().closed_form, Partition{k}, 8);
    }
    CHECK(engine.memo_size() >= 5);
    CHECK_THROWS_AS(engine.derive_hook(0), std::invalid_argument);
  }

  TEST_CASE("closed sums are memoised") {
    DerivationEngine engine;
    const auto first = engine.closed(cp(Partition{1}));
    const std::size_t size = engine.memo_size();
    const auto second = engine.closed(cp(Partition{1}));
    REQUIRE(first);
    REQUIRE(second);
    CHECK(first.value().closed_form == second.value().closed_form);
    CHECK(engine.memo_size() == size);
    CHECK(engine.closed(CpExpression{}).value().closed_form.is_zero());
  }

  TEST_CASE("one-column inner shapes by conjugation") {
    DerivationEngine engine;
    const CpExpression conj = conjugate_formula(engine.derive_hook(2).value().closed_form);
    CHECK(conj == cp(Partition{1, 1}, Rational(1, 2)) - cp(Partition{2}) - cp(Partition{1}, Rational(1, 2)));
    check_against_oracle(conj, Partition{1, 1}, 8);
    const auto rec = engine.skew_formula(Partition{1, 1, 1});
    REQUIRE(rec);
    check_against_oracle(rec.value().expression, Partition{1, 1, 1}, 8);
  }

  TEST_CASE("the two routes to (1,1,1) agree") {
    DerivationEngine engine;
    std::map<Partition, CpExpression> known;
    for (int k = 1; k <= 3; ++k) known[Partition{k}] = engine.derive_hook(k).value().closed_form;
    known[Partition{1, 1}] = conjugate_formula(known[Partition{2}]);
    const auto lattice = young_lattice_solve(known, Partition{1, 1, 1}, false);
    REQUIRE(lattice);
    CHECK(lattice.value().expression == conjugate_formula(known[Partition{3}]));
    CHECK_FALSE(lattice.value().route.empty());
  }

  TEST_CASE("general inner shapes through the Young lattice") {
    DerivationEngine engine;
    for (const Partition& mu : {Partition{2, 1}, Partition{2, 2}, Partition{3, 1}, Partition{2, 1, 1}}) {
      const auto rec = engine.skew_formula(mu);
      REQUIRE(rec);
      check_against_oracle(rec.value().expression, mu, 8);
    }
  }

  TEST_CASE("young lattice failure names what is missing") {
    const auto r = young_lattice_solve({}, Partition{2, 2}, false);
    REQUIRE_FALSE(r);
    CHECK(r.failure().stage == "young-lattice");
    CHECK(r.failure().detail.find("(2)") != std::string::npos);
    CHECK(r.failure().detail.find("(1,1)") != std::string::npos);
    CHECK_THROWS_AS(r.value(), std::logic_error);
  }

  TEST_CASE("character formulas") {
    DerivationEngine engine;
    const auto four = engine.character_formula(Partition{4});
    REQUIRE(four);
    CHECK(four.value().expression == cp(Partition{4}, 4) - cp(Partition{2, 1}, 8) + cp(Partition{2}, 12));
    const auto two_one = engine.character_formula(Partition{2, 1});
    REQUIRE(two_one);
    CHECK(two_one.value().expression == cp(Partition{2, 1}, 2) - cp(Partition{2}, 4));
    for (const Partition& mu : {Partition{2}, Partition{3}, Partition{2, 2}, Partition{3, 1}, Partition{3, 2}}) {
      const auto rec = engine.character_formula(mu);
      REQUIRE(rec);
      const int k = mu.size();
      for (const Partition& lambda : testing::partitions_up_to_size(8)) {
        if (lambda.size() < k) continue;
        const Rational expected = Rational(falling_factorial(lambda.size(), k) *
                                           chi_mn(lambda, pad_with_ones(mu, lambda.size()))) /
                                  Rational(testing::hook_length_count(lambda));
        CHECK(eval_on_shape(rec.value().expression, lambda) == expected);
      }
    }
  }

  TEST_CASE("verification report") {
    DerivationEngine engine;
    FormulaRecord rec = engine.skew_formula(Partition{2}).value();
    const VerificationReport good = verify_formula(rec, 7);
    CHECK(good.ok());
    CHECK(good.rows.size() == testing::partitions_up_to_size(7).size());
    const std::string tsv = to_tsv(good);
    CHECK(tsv.rfind("lambda\tn\tvalue\tf_lambda\tscaled\texpected\tstatus\n", 0) == 0);
    CHECK(tsv.find("MISMATCH") == std::string::npos);

    rec.expression.add_term(Partition{2}, 1);
    const VerificationReport bad = verify_formula(rec, 7);
    CHECK_FALSE(bad.ok());
    CHECK(bad.mismatches() > 0);
    CHECK(to_tsv(bad).find("MISMATCH") != std::string::npos);
  }

  TEST_CASE("record serialisation") {
    DerivationEngine engine;
    const FormulaRecord rec = engine.skew_formula(Partition{1, 1}).value();
    const nlohmann::json j = to_json(rec);
    CHECK(j.at("target") == to_string(FormulaTarget::skew_count));
    CHECK(cp_expression_from_json(j.at("expression")) == rec.expression);
    CHECK(j.at("route").size() == rec.route.size());
  }
}

#pragma once

#include "taquin/numeric.hpp"
#include "taquin/partition.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace taquin {

/// Monomial order used for printing and iteration: larger |α| first, then
/// lexicographically increasing parts, so (1,1,1) < (2,1) < (3) < (1,1).
struct DegreeOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// Rational combination of content power sums cp^α. The empty partition is
/// the constant monomial 1.
class CpExpression {
 public:
  using Terms = std::map<Partition, Rational, DegreeOrder>;

  CpExpression() = default;
  static CpExpression constant(const Rational& c);
  static CpExpression monomial(const Partition& alpha, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  Rational coefficient(const Partition& alpha) const;
  /// Largest |α| with a nonzero coefficient; 0 for constants and zero.
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Partition& alpha, const Rational& c);

  CpExpression& operator+=(const CpExpression& o);
  CpExpression& operator-=(const CpExpression& o);
  CpExpression& operator*=(const Rational& c);
  friend CpExpression operator+(CpExpression a, const CpExpression& b) { return a += b; }
  friend CpExpression operator-(CpExpression a, const CpExpression& b) { return a -= b; }
  friend CpExpression operator*(CpExpression a, const Rational& c) { return a *= c; }
  friend CpExpression operator*(const Rational& c, CpExpression a) { return a *= c; }
  friend CpExpression operator*(const CpExpression& a, const CpExpression& b);
  CpExpression operator-() const { return *this * Rational(-1); }

  bool operator==(const CpExpression& o) const { return terms_ == o.terms_; }
  bool operator<(const CpExpression& o) const;

 private:
  Terms terms_;
};

/// "1/2 cp^(1,1) + cp^(2) - 1/2 cp^(1)"; "0" for the zero expression.
std::string to_string(const CpExpression& e);

/// <^(β) ∨^(γ): β evaluates on the right subtree, γ on the upper subtree.
struct BracketMonomial {
  Partition left;
  Partition up;

  bool operator==(const BracketMonomial&) const = default;
};

struct BracketOrder {
  bool operator()(const BracketMonomial& a, const BracketMonomial& b) const;
};

class BracketExpression {
 public:
  using Terms = std::map<BracketMonomial, Rational, BracketOrder>;

  BracketExpression() = default;
  static BracketExpression constant(const Rational& c);
  static BracketExpression monomial(const Partition& left, const Partition& up, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  Rational coefficient(const BracketMonomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BracketMonomial& m, const Rational& c);

  BracketExpression& operator+=(const BracketExpression& o);
  BracketExpression& operator-=(const BracketExpression& o);
  BracketExpression& operator*=(const Rational& c);
  friend BracketExpression operator+(BracketExpression a, const BracketExpression& b) { return a += b; }
  friend BracketExpression operator-(BracketExpression a, const BracketExpression& b) { return a -= b; }
  friend BracketExpression operator*(BracketExpression a, const Rational& c) { return a *= c; }
  friend BracketExpression operator*(const Rational& c, BracketExpression a) { return a *= c; }
  friend BracketExpression operator*(const BracketExpression& a, const BracketExpression& b);

  bool operator==(const BracketExpression& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

/// "2<^(1) + <^(1)∨^(1)"; "0" for the zero expression.
std::string to_string(const BracketExpression& e);

/// Π_i Σ_{w ∈ cells} (c(w) - c(origin))^{α_i - 1}, with 0^0 = 1.
BigInt eval_cp(const Partition& alpha, Cell origin, const std::vector<Cell>& cells);
Rational eval(const CpExpression& e, Cell origin, const std::vector<Cell>& cells);
/// Evaluation on the cells of λ with the origin at (0,0).
Rational eval_on_shape(const CpExpression& e, const Partition& lambda);
/// <^(β)∨^(γ) ↦ cp^β_origin(left) · cp^γ_origin(up).
Rational eval(const BracketExpression& e, Cell origin, const std::vector<Cell>& left, const std::vector<Cell>& up);

/// Re-rooting one cell to the right (Γ+) or up (Γ-): Γ+ e evaluated at a
/// equals e evaluated at a's right neighbour on the same cells.
CpExpression gamma_plus(const CpExpression& e);
CpExpression gamma_minus(const CpExpression& e);

/// One term C · cp^{α1}(A) · cp^{α2}(B) of cp^α(A ∪ B) for disjoint A, B.
struct UnionTerm {
  BigInt coefficient;
  Partition first;
  Partition second;
};

/// Σ over α1 ⊎ α2 = α with coefficient Π_i C(m(α,i), m(α1,i)).
std::vector<UnionTerm> union_split(const Partition& alpha);

/// Inductive form f(S) - f(S_<) - f(S_∨) as a polynomial in <^(k), ∨^(k).
BracketExpression delta(const CpExpression& e);

/// cp^α ↦ <^(α), resp. ∨^(α).
BracketExpression to_left(const CpExpression& e);
BracketExpression to_up(const CpExpression& e);

/// Result of matching a bracket expression against Δ of cp-combinations.
struct Identification {
  std::optional<CpExpression> expression;  // empty when unidentifiable
  bool unique = false;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  int bound_used = 0;
};

/// Finds f with Δf = b and f(∅) = constant_at_empty among combinations of
/// cp^α with |α| ≤ degree_bound, retrying once with degree_bound + 1.
/// Throws std::invalid_argument when degree_bound < 1.
Identification identify(const BracketExpression& b, const Rational& constant_at_empty, int degree_bound);

/// Partitions α with 1 ≤ |α| ≤ bound, larger |α| first.
std::vector<Partition> partitions_up_to(int bound);

/// [{"coeff": "p/q", "alpha": [k1, ...]}, ...]
nlohmann::json to_json(const CpExpression& e);
CpExpression cp_expression_from_json(const nlohmann::json& j);
/// [{"coeff": "p/q", "left": [...], "up": [...]}, ...]
nlohmann::json to_json(const BracketExpression& e);
BracketExpression bracket_expression_from_json(const nlohmann::json& j);

}  // namespace taquin

#include "taquin/content_algebra.hpp"

#include "taquin/exact_linear.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace taquin {

bool DegreeOrder::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.parts() < b.parts();
}

namespace {

template <class Map, class Key>
void accumulate(Map& terms, const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

std::string coefficient_prefix(const Rational& c, bool first, bool has_symbol) {
  std::string out;
  const Rational mag = c < 0 ? Rational(-c) : c;
  if (first)
    out = c < 0 ? "-" : "";
  else
    out = c < 0 ? " - " : " + ";
  if (!has_symbol) return out + to_string(mag);
  if (mag != 1) out += to_string(mag) + " ";
  return out;
}

std::string parts_text(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

}  // namespace

CpExpression CpExpression::constant(const Rational& c) { return monomial(Partition(), c); }

CpExpression CpExpression::monomial(const Partition& alpha, const Rational& c) {
  CpExpression e;
  e.add_term(alpha, c);
  return e;
}

Rational CpExpression::coefficient(const Partition& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CpExpression::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.size(); }

void CpExpression::add_term(const Partition& alpha, const Rational& c) { accumulate(terms_, alpha, c); }

CpExpression& CpExpression::operator+=(const CpExpression& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

CpExpression& CpExpression::operator-=(const CpExpression& o) {
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

CpExpression& CpExpression::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, v] : terms_) v *= c;
  return *this;
}

CpExpression operator*(const CpExpression& a, const CpExpression& b) {
  CpExpression out;
  for (const auto& [x, u] : a.terms_)
    for (const auto& [y, v] : b.terms_) out.add_term(merge(x, y), u * v);
  return out;
}

bool CpExpression::operator<(const CpExpression& o) const {
  return std::lexicographical_compare(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return DegreeOrder{}(x.first, y.first);
                                        return x.second < y.second;
                                      });
}

std::string to_string(const CpExpression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [alpha, c] : e.terms()) {
    const bool symbol = !alpha.empty();
    out += coefficient_prefix(c, first, symbol);
    if (symbol) out += "cp^" + parts_text(alpha);
    first = false;
  }
  return out;
}

bool BracketOrder::operator()(const BracketMonomial& a, const BracketMonomial& b) const {
  const int da = a.left.size() + a.up.size();
  const int db = b.left.size() + b.up.size();
  if (da != db) return da > db;
  if (a.left.size() != b.left.size()) return a.left.size() > b.left.size();
  const DegreeOrder less;
  if (a.left != b.left) return less(a.left, b.left);
  return less(a.up, b.up);
}

BracketExpression BracketExpression::constant(const Rational& c) { return monomial(Partition(), Partition(), c); }

BracketExpression BracketExpression::monomial(const Partition& left, const Partition& up, const Rational& c) {
  BracketExpression e;
  e.add_term({left, up}, c);
  return e;
}

Rational BracketExpression::coefficient(const BracketMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BracketExpression::add_term(const BracketMonomial& m, const Rational& c) { accumulate(terms_, m, c); }

BracketExpression& BracketExpression::operator+=(const BracketExpression& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BracketExpression& BracketExpression::operator-=(const BracketExpression& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BracketExpression& BracketExpression::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BracketExpression operator*(const BracketExpression& a, const BracketExpression& b) {
  BracketExpression out;
  for (const auto& [x, u] : a.terms_)
    for (const auto& [y, v] : b.terms_) out.add_term({merge(x.left, y.left), merge(x.up, y.up)}, u * v);
  return out;
}

std::string to_string(const BracketExpression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool symbol = !m.left.empty() || !m.up.empty();
    out += coefficient_prefix(c, first, symbol);
    if (!m.left.empty()) out += "<^" + parts_text(m.left);
    if (!m.up.empty()) out += "∨^" + parts_text(m.up);
    first = false;
  }
  return out;
}

BigInt eval_cp(const Partition& alpha, Cell origin, const std::vector<Cell>& cells) {
  BigInt product = 1;
  for (int k : alpha.parts()) {
    BigInt sum = 0;
    for (const Cell& w : cells) sum += boost::multiprecision::pow(BigInt(w.content() - origin.content()), static_cast<unsigned>(k - 1));
    product *= sum;
    if (product == 0) break;
  }
  return product;
}

Rational eval(const CpExpression& e, Cell origin, const std::vector<Cell>& cells) {
  Rational total = 0;
  for (const auto& [alpha, c] : e.terms()) total += c * Rational(eval_cp(alpha, origin, cells));
  return total;
}

Rational eval_on_shape(const CpExpression& e, const Partition& lambda) { return eval(e, Cell{0, 0}, cells(lambda)); }

Rational eval(const BracketExpression& e, Cell origin, const std::vector<Cell>& left, const std::vector<Cell>& up) {
  Rational total = 0;
  for (const auto& [m, c] : e.terms())
    total += c * Rational(eval_cp(m.left, origin, left) * eval_cp(m.up, origin, up));
  return total;
}

namespace {

// Image of the generator cp^(k) under re-rooting: Σ_i s^i C(k-1,i) cp^(k-i).
CpExpression shifted_generator(int k, int sign) {
  CpExpression out;
  for (int i = 0; i < k; ++i) {
    Rational c(binomial(k - 1, i));
    if (sign < 0 && i % 2 == 1) c = -c;
    out.add_term(Partition{k - i}, c);
  }
  return out;
}

CpExpression rerooted(const CpExpression& e, int sign) {
  CpExpression out;
  for (const auto& [alpha, c] : e.terms()) {
    CpExpression term = CpExpression::constant(c);
    for (int k : alpha.parts()) term = term * shifted_generator(k, sign);
    out += term;
  }
  return out;
}

}  // namespace

CpExpression gamma_plus(const CpExpression& e) { return rerooted(e, -1); }
CpExpression gamma_minus(const CpExpression& e) { return rerooted(e, +1); }

std::vector<UnionTerm> union_split(const Partition& alpha) {
  std::vector<std::pair<int, int>> groups;  // (part, multiplicity), parts decreasing
  for (int p : alpha.parts()) {
    if (!groups.empty() && groups.back().first == p)
      ++groups.back().second;
    else
      groups.push_back({p, 1});
  }
  std::vector<UnionTerm> out;
  std::vector<int> take(groups.size(), 0);
  while (true) {
    UnionTerm t{1, {}, {}};
    std::vector<int> first, second;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      t.coefficient *= binomial(groups[g].second, take[g]);
      first.insert(first.end(), static_cast<std::size_t>(take[g]), groups[g].first);
      second.insert(second.end(), static_cast<std::size_t>(groups[g].second - take[g]), groups[g].first);
    }
    t.first = Partition(std::move(first));
    t.second = Partition(std::move(second));
    out.push_back(std::move(t));
    std::size_t g = 0;
    while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
    if (g == groups.size()) break;
    ++take[g];
  }
  return out;
}

namespace {

BracketExpression delta_monomial(const Partition& alpha) {
  if (alpha.empty()) return BracketExpression::constant(-1);
  BracketExpression whole = BracketExpression::constant(1);
  BracketExpression left = whole;
  BracketExpression up = whole;
  for (int k : alpha.parts()) {
    // cp^(k)(S) = <^(k) + ∨^(k) + [k = 1]: the root has relative content 0.
    BracketExpression g = BracketExpression::monomial(Partition{k}, {}) + BracketExpression::monomial({}, Partition{k});
    if (k == 1) g += BracketExpression::constant(1);
    whole = whole * g;
    left = left * to_left(shifted_generator(k, -1));
    up = up * to_up(shifted_generator(k, +1));
  }
  return whole - left - up;
}

const BracketExpression& cached_delta(const Partition& alpha) {
  static std::mutex mutex;
  static std::map<Partition, BracketExpression> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(alpha);
  if (it == cache.end()) it = cache.emplace(alpha, delta_monomial(alpha)).first;
  return it->second;
}

}  // namespace

BracketExpression delta(const CpExpression& e) {
  BracketExpression out;
  for (const auto& [alpha, c] : e.terms()) out += cached_delta(alpha) * c;
  return out;
}

BracketExpression to_left(const CpExpression& e) {
  BracketExpression out;
  for (const auto& [alpha, c] : e.terms()) out.add_term({alpha, {}}, c);
  return out;
}

BracketExpression to_up(const CpExpression& e) {
  BracketExpression out;
  for (const auto& [alpha, c] : e.terms()) out.add_term({{}, alpha}, c);
  return out;
}

std::vector<Partition> partitions_up_to(int bound) {
  std::vector<Partition> out;
  for (int d = bound; d >= 1; --d) {
    std::vector<Partition> level = partitions_of(d);
    std::sort(level.begin(), level.end(), DegreeOrder{});
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

Identification identify_at(const BracketExpression& b, const Rational& c0, int bound) {
  const std::vector<Partition> basis = partitions_up_to(bound);
  std::vector<const BracketExpression*> deltas;
  std::map<BracketMonomial, std::size_t, BracketOrder> row_of;
  for (const Partition& alpha : basis) {
    deltas.push_back(&cached_delta(alpha));
    for (const auto& [m, c] : deltas.back()->terms()) row_of.try_emplace(m, 0);
  }
  // Δ(c0) = -c0 moves to the right-hand side.
  const BracketExpression rhs = b + BracketExpression::constant(c0);
  for (const auto& [m, c] : rhs.terms()) row_of.try_emplace(m, 0);
  std::size_t next = 0;
  for (auto& [m, row] : row_of) row = next++;

  std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(basis.size(), Rational(0)));
  std::vector<Rational> v(row_of.size(), Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, c] : deltas[j]->terms()) a[row_of.at(m)][j] = c;
  for (const auto& [m, c] : rhs.terms()) v[row_of.at(m)] = c;

  const LinearSolution sol = solve_exact(std::move(a), std::move(v), basis.size());
  Identification out;
  out.rank = sol.rank;
  out.unknowns = basis.size();
  out.bound_used = bound;
  if (!sol.consistent) return out;
  CpExpression f = CpExpression::constant(c0);
  for (std::size_t j = 0; j < basis.size(); ++j) f.add_term(basis[j], sol.x[j]);
  out.expression = std::move(f);
  out.unique = sol.unique();
  return out;
}

}  // namespace

Identification identify(const BracketExpression& b, const Rational& constant_at_empty, int degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("identify: degree bound must be at least 1");
  Identification first = identify_at(b, constant_at_empty, degree_bound);
  if (first.expression) return first;
  return identify_at(b, constant_at_empty, degree_bound + 1);
}

nlohmann::json to_json(const CpExpression& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [alpha, c] : e.terms()) out.push_back({{"coeff", to_string(c)}, {"alpha", alpha.parts()}});
  return out;
}

CpExpression cp_expression_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("cp expression JSON must be an array");
  CpExpression out;
  for (const auto& rec : j)
    out.add_term(Partition(rec.at("alpha").get<std::vector<int>>()), parse_rational(rec.at("coeff").get<std::string>()));
  return out;
}

nlohmann::json to_json(const BracketExpression& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : e.terms())
    out.push_back({{"coeff", to_string(c)}, {"left", m.left.parts()}, {"up", m.up.parts()}});
  return out;
}

BracketExpression bracket_expression_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("bracket expression JSON must be an array");
  BracketExpression out;
  for (const auto& rec : j)
    out.add_term({Partition(rec.at("left").get<std::vector<int>>()), Partition(rec.at("up").get<std::vector<int>>())},
                 parse_rational(rec.at("coeff").get<std::string>()));
  return out;
}

}  // namespace taquin

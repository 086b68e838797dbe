#include "taquin/derivation.hpp"

#include "taquin/characters.hpp"
#include "taquin/exact_linear.hpp"
#include "taquin/tableau.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace taquin {

CpExpression conjugate_formula(const CpExpression& e) {
  CpExpression out;
  for (const auto& [alpha, c] : e.terms()) {
    const bool flip = (alpha.size() - alpha.length()) % 2 != 0;
    out.add_term(alpha, flip ? Rational(-c) : c);
  }
  return out;
}

std::optional<ClosedSum> DerivationEngine::lookup(const CpExpression& kernel) const {
  std::lock_guard lock(mutex_);
  const auto it = memo_.find(kernel);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void DerivationEngine::store(const CpExpression& kernel, const ClosedSum& value) {
  std::lock_guard lock(mutex_);
  memo_.emplace(kernel, value);
}

std::size_t DerivationEngine::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

Result<ClosedSum> DerivationEngine::closed(const CpExpression& kernel) {
  if (auto hit = lookup(kernel)) return *hit;

  const Rational c = kernel.coefficient(Partition());
  CpExpression rest = kernel;
  rest.add_term(Partition(), -c);

  ClosedSum out;
  out.closed_form = CpExpression::monomial(Partition{1}, c);
  out.delta = BracketExpression::constant(c);
  if (!rest.is_zero()) {
    // Terms where a ranges over the root: P on S_< itself.
    BracketExpression b = to_left(rest);

    // a ranges over S_<: C_<(a,S) is C_<(a,S_<) plus the cell right of the
    // root, whose relative content 1 makes every singleton power sum 1.
    CpExpression adjoined;
    for (const auto& [alpha, coef] : rest.terms())
      for (const UnionTerm& t : union_split(alpha)) adjoined.add_term(t.first, coef * Rational(t.coefficient));
    const CpExpression q_right = adjoined - gamma_plus(rest);
    if (!q_right.is_zero()) {
      const auto sub = closed(gamma_minus(q_right));
      if (!sub) return sub.failure();
      b += to_left(gamma_plus(sub.value().closed_form));
    }

    // a ranges over S_∨: C_<(a,S) is C_<(a,S_∨) together with all of S_<.
    std::map<Partition, CpExpression, DegreeOrder> groups;
    for (const auto& [alpha, coef] : rest.terms())
      for (const UnionTerm& t : union_split(alpha))
        if (!t.first.empty()) groups[t.first].add_term(t.second, coef * Rational(t.coefficient));
    groups[Partition()] = rest - gamma_minus(rest);
    for (const auto& [left, q] : groups) {
      if (q.is_zero()) continue;
      const auto sub = closed(gamma_plus(q));
      if (!sub) return sub.failure();
      b += BracketExpression::monomial(left, Partition()) * to_up(gamma_minus(sub.value().closed_form));
    }

    const Identification id = identify(b, 0, rest.degree() + 1);
    if (!id.expression)
      return DerivationFailure{"identify", "no cp-combination of degree <= " + std::to_string(id.bound_used) +
                                               " has inductive form " + to_string(b) + " (kernel " +
                                               to_string(kernel) + ")"};
    out.closed_form += *id.expression;
    out.delta += b;
    out.unique = id.unique;
    out.rank = id.rank;
  }
  store(kernel, out);
  return out;
}

Result<GFunctional> DerivationEngine::derive_hook(int k) {
  if (k < 1) throw std::invalid_argument("derive_hook: k must be positive");
  GFunctional g;
  g.kernel = CpExpression::constant(1);
  for (int j = 1; j <= k; ++j) {
    if (j > 1) g.kernel = gamma_plus(g.closed_form);
    const auto sum = closed(g.kernel);
    if (!sum) return sum.failure();
    g.closed_form = sum.value().closed_form;
    g.delta = sum.value().delta;
  }
  g.mu = Partition{k};
  return g;
}

namespace {

std::string join(const std::vector<Partition>& ps) {
  std::string out;
  for (const Partition& p : ps) {
    if (!out.empty()) out += ' ';
    out += "(" + p.to_string() + ")";
  }
  return out.empty() ? "-" : out;
}

bool is_row(const Partition& p) { return p.length() == 1; }
bool is_column(const Partition& p) { return !p.empty() && p[0] == 1; }

// Fills in every formula of level k that the lattice relations determine.
// Returns the partitions of level k that stay undetermined.
std::vector<Partition> solve_level(std::map<Partition, CpExpression>& known, int k, bool use_conjugation,
                                   std::vector<std::string>& route) {
  const std::vector<Partition> level = partitions_of(k);
  if (use_conjugation)
    for (const Partition& mu : level) {
      const Partition conj = conjugate(mu);
      if (!known.count(mu) && known.count(conj)) {
        known[mu] = conjugate_formula(known.at(conj));
        route.push_back("(" + mu.to_string() + ") = conjugate of (" + conj.to_string() + ")");
      }
    }
  std::vector<Partition> unknown, given;
  for (const Partition& mu : level) (known.count(mu) ? given : unknown).push_back(mu);
  if (unknown.empty()) return {};

  // Unknowns: coefficient of cp^α in F_μ for each undetermined μ and each α
  // with |α| <= k, the constant included.
  std::vector<Partition> basis = partitions_up_to(k);
  basis.push_back(Partition());
  std::map<Partition, std::size_t> basis_index;
  for (std::size_t i = 0; i < basis.size(); ++i) basis_index[basis[i]] = i;
  std::map<Partition, std::size_t> unknown_index;
  for (std::size_t i = 0; i < unknown.size(); ++i) unknown_index[unknown[i]] = i;
  const std::size_t width = unknown.size() * basis.size();
  auto var = [&](const Partition& mu, std::size_t alpha) { return unknown_index.at(mu) * basis.size() + alpha; };

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const Partition& nu : partitions_of(k - 1)) {
    CpExpression rhs = (CpExpression::monomial(Partition{1}) - CpExpression::constant(k - 1)) * known.at(nu);
    std::vector<Partition> unknown_terms;
    for (const Partition& up : add_cell_set(nu)) {
      if (known.count(up))
        rhs -= known.at(up);
      else
        unknown_terms.push_back(up);
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      std::vector<Rational> row(width, Rational(0));
      for (const Partition& up : unknown_terms) row[var(up, j)] = 1;
      a.push_back(std::move(row));
      b.push_back(rhs.coefficient(basis[j]));
    }
    for (const auto& [alpha, coef] : rhs.terms())
      if (!basis_index.count(alpha)) {
        a.emplace_back(width, Rational(0));
        b.push_back(coef);
      }
  }
  if (use_conjugation)
    for (const Partition& mu : unknown) {
      const Partition conj = conjugate(mu);
      if (conj < mu) continue;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        std::vector<Rational> row(width, Rational(0));
        const bool flip = (basis[j].size() - basis[j].length()) % 2 != 0;
        row[var(mu, j)] += 1;
        row[var(conj, j)] -= flip ? -1 : 1;
        a.push_back(std::move(row));
        b.push_back(0);
      }
    }

  const LinearSolution sol = solve_exact(std::move(a), std::move(b), width);
  if (!sol.consistent) return unknown;
  std::vector<Partition> solved, open;
  for (const Partition& mu : unknown) {
    bool determined = true;
    CpExpression f;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      determined = determined && sol.determined[var(mu, j)];
      f.add_term(basis[j], sol.x[var(mu, j)]);
    }
    if (determined) {
      known[mu] = std::move(f);
      solved.push_back(mu);
    } else {
      open.push_back(mu);
    }
  }
  if (!solved.empty())
    route.push_back("level " + std::to_string(k) + ": solved " + join(solved) + " from " + join(given) +
                    " and level " + std::to_string(k - 1) + (use_conjugation ? " with conjugation" : ""));
  return open;
}

}  // namespace

Result<YoungLatticeSolution> young_lattice_solve(const std::map<Partition, CpExpression>& given,
                                                 const Partition& target, bool use_conjugation) {
  std::map<Partition, CpExpression> known = given;
  known.try_emplace(Partition(), CpExpression::constant(1));
  YoungLatticeSolution out;
  if (known.count(target)) {
    out.expression = known.at(target);
    out.route.push_back("(" + target.to_string() + ") given");
    return out;
  }
  for (int level = 1; level <= target.size(); ++level) {
    const std::vector<Partition> open = solve_level(known, level, use_conjugation, out.route);
    if (level < target.size() && !open.empty())
      return DerivationFailure{"young-lattice", "level " + std::to_string(level) + " leaves " + join(open) +
                                                    " undetermined; needed before (" + target.to_string() + ")"};
    if (level == target.size() && std::find(open.begin(), open.end(), target) != open.end())
      return DerivationFailure{"young-lattice", "(" + target.to_string() + ") undetermined; missing prerequisites " +
                                                    join(open)};
  }
  out.expression = known.at(target);
  return out;
}

Result<FormulaRecord> DerivationEngine::skew_formula(const Partition& mu) {
  FormulaRecord rec;
  rec.target = FormulaTarget::skew_count;
  rec.mu = mu;
  const int k = mu.size();
  if (k == 0) {
    rec.expression = CpExpression::constant(1);
    rec.route.push_back("empty inner shape");
    return rec;
  }
  std::map<Partition, CpExpression> known;
  for (int j = 1; j <= k; ++j) {
    const auto g = derive_hook(j);
    if (!g) return g.failure();
    known[Partition{j}] = g.value().closed_form;
  }
  if (is_row(mu)) {
    rec.expression = known.at(mu);
    rec.route.push_back("(" + mu.to_string() + ") derived directly");
    return rec;
  }
  if (is_column(mu)) {
    rec.expression = conjugate_formula(known.at(Partition{k}));
    rec.route.push_back("(" + mu.to_string() + ") = conjugate of (" + std::to_string(k) + ")");
    return rec;
  }
  rec.route.push_back("direct scheme covers one-row shapes only; derived (1) .. (" + std::to_string(k) + ")");
  const auto solved = young_lattice_solve(known, mu, true);
  if (!solved) return solved.failure();
  rec.expression = solved.value().expression;
  rec.route.insert(rec.route.end(), solved.value().route.begin(), solved.value().route.end());
  return rec;
}

Result<FormulaRecord> DerivationEngine::character_formula(const Partition& mu) {
  FormulaRecord rec;
  rec.target = FormulaTarget::character;
  rec.mu = mu;
  for (const Partition& nu : partitions_of(mu.size())) {
    const BigInt chi = chi_mn(nu, mu);
    if (chi == 0) continue;
    const auto f = skew_formula(nu);
    if (!f) return f.failure();
    rec.expression += f.value().expression * Rational(chi);
    rec.route.push_back(to_string(chi) + " x f^{λ/(" + nu.to_string() + ")}: " + f.value().route.back());
  }
  return rec;
}

std::size_t VerificationReport::mismatches() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerificationRow& r) {
    return !r.match || !r.integral;
  }));
}

VerificationReport verify_formula(const FormulaRecord& rec, int n_max) {
  VerificationReport report;
  report.record = rec;
  report.n_max = n_max;
  const int k = rec.mu.size();
  const int n_min = rec.target == FormulaTarget::character ? std::max(k, 1) : 1;
  for (int n = n_min; n <= n_max; ++n) {
    const BigInt ff = falling_factorial(n, k);
    for (const Partition& lambda : partitions_of(n)) {
      VerificationRow row;
      row.lambda = lambda;
      row.value = eval_on_shape(rec.expression, lambda);
      row.f_lambda = count_standard(lambda);
      row.scaled = row.value * Rational(row.f_lambda);
      const BigInt oracle = rec.target == FormulaTarget::skew_count ? count_skew(lambda, rec.mu)
                                                                    : chi_mn(lambda, pad_with_ones(rec.mu, n));
      row.expected = ff * oracle;
      row.integral = denominator(row.scaled) == 1;
      row.match = row.scaled == Rational(row.expected);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string to_tsv(const VerificationReport& report) {
  std::ostringstream out;
  out << "lambda\tn\tvalue\tf_lambda\tscaled\texpected\tstatus\n";
  for (const VerificationRow& r : report.rows)
    out << r.lambda.to_string() << '\t' << r.lambda.size() << '\t' << to_string(r.value) << '\t'
        << to_string(r.f_lambda) << '\t' << to_string(r.scaled) << '\t' << to_string(r.expected) << '\t'
        << (r.match && r.integral ? "ok" : "MISMATCH") << '\n';
  return out.str();
}

std::string to_string(FormulaTarget t) { return t == FormulaTarget::skew_count ? "skew_count" : "character"; }

nlohmann::json to_json(const FormulaRecord& rec) {
  return {{"target", to_string(rec.target)},
          {"mu", rec.mu.parts()},
          {"normalization", "(n)_k / f^lambda"},
          {"expression", to_json(rec.expression)},
          {"text", to_string(rec.expression)},
          {"route", rec.route}};
}

}  // namespace taquin

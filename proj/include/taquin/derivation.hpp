#pragma once

#include "taquin/content_algebra.hpp"

#include <json.hpp>

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taquin {

/// Why a derivation step produced no formula.
struct DerivationFailure {
  std::string stage;   // "identify", "young-lattice", ...
  std::string detail;  // names the irreducible term or the missing inputs
};

/// Either a value or a DerivationFailure; failures are ordinary results.
template <class T>
class Result {
 public:
  Result(T value) : state_(std::move(value)) {}
  Result(DerivationFailure failure) : state_(std::move(failure)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const {
    if (!ok()) throw std::logic_error("Result::value on failure: " + failure().detail);
    return std::get<T>(state_);
  }
  const DerivationFailure& failure() const { return std::get<DerivationFailure>(state_); }

 private:
  std::variant<T, DerivationFailure> state_;
};

/// Closed form of S ↦ Σ_{a ∈ S} P(C_<(a,S)) for a kernel P evaluated with
/// the root of S as origin, together with its inductive form.
struct ClosedSum {
  CpExpression closed_form;
  BracketExpression delta;
  bool unique = true;
  std::size_t rank = 0;
};

/// Counting functional for the one-row inner shape mu = (k).
struct GFunctional {
  Partition mu;
  CpExpression kernel;
  CpExpression closed_form;
  BracketExpression delta;
};

enum class FormulaTarget { skew_count, character };

/// For skew_count: expression(λ) = (n)_k f^{λ/μ} / f^λ.
/// For character: expression(λ) = (n)_k χ^λ_{(μ,1^{n-k})} / f^λ.
struct FormulaRecord {
  FormulaTarget target = FormulaTarget::skew_count;
  Partition mu;
  CpExpression expression;
  std::vector<std::string> route;
};

/// cp^(i) ↦ (-1)^{i-1} cp^(i): the formula for the conjugate inner shape.
CpExpression conjugate_formula(const CpExpression& e);

struct YoungLatticeSolution {
  CpExpression expression;
  std::vector<std::string> route;
};

/// Solves for the normalised formula of `target` from `known` ones using
/// Σ_{μ' = ν + one cell} F_{μ'} = (cp^(1) - |ν|) F_ν level by level, with
/// F_∅ = 1. With `use_conjugation` the relation F_{μ†} = conjugate(F_μ) is
/// also imposed. Fails naming the undetermined shapes.
Result<YoungLatticeSolution> young_lattice_solve(const std::map<Partition, CpExpression>& known,
                                                 const Partition& target, bool use_conjugation = true);

/// Symbolic engine for the sum functionals. Memoises closed forms per
/// kernel; safe to share between threads.
class DerivationEngine {
 public:
  Result<ClosedSum> closed(const CpExpression& kernel);
  /// G_(1) = cp^(1); G_(j) has kernel Γ+ G_(j-1).
  Result<GFunctional> derive_hook(int k);
  /// Normalised f^{λ/μ} formula: direct for one-row μ, by conjugation for
  /// one-column μ, otherwise through the Young lattice.
  Result<FormulaRecord> skew_formula(const Partition& mu);
  /// Σ_{ν ⊢ k} χ^ν_μ · skew_formula(ν).
  Result<FormulaRecord> character_formula(const Partition& mu);

  std::size_t memo_size() const;

 private:
  std::optional<ClosedSum> lookup(const CpExpression& kernel) const;
  void store(const CpExpression& kernel, const ClosedSum& value);

  mutable std::mutex mutex_;
  std::map<CpExpression, ClosedSum> memo_;
};

struct VerificationRow {
  Partition lambda;
  Rational value;  // expression(λ)
  BigInt f_lambda;
  Rational scaled;  // value · f^λ
  BigInt expected;  // (n)_k · oracle
  bool integral = false;
  bool match = false;
};

struct VerificationReport {
  FormulaRecord record;
  int n_max = 0;
  std::vector<VerificationRow> rows;

  std::size_t mismatches() const;
  bool ok() const { return mismatches() == 0; }
};

/// Checks expression(λ) · f^λ = (n)_k · oracle for every λ ⊢ n ≤ n_max
/// (n ≥ 1 for skew counts, n ≥ |μ| for characters). The oracle is
/// enumeration for skew counts and Murnaghan–Nakayama for characters.
VerificationReport verify_formula(const FormulaRecord& rec, int n_max);

/// Header line plus one line per λ.
std::string to_tsv(const VerificationReport& report);

std::string to_string(FormulaTarget t);
nlohmann::json to_json(const FormulaRecord& rec);

}  // namespace taquin

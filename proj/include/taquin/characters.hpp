#pragma once

#include "taquin/numeric.hpp"
#include "taquin/partition.hpp"

#include <functional>
#include <vector>

namespace taquin {

/// Nonempty, edge-connected and free of 2x2 blocks.
bool is_ribbon(const SkewShape& s);

/// Rows spanned minus one. Throws std::invalid_argument for a non-ribbon.
int ribbon_height(const SkewShape& s);

/// Chain ∅ = λ^(0) ⊂ ... ⊂ λ^(k) = λ whose steps are ribbons of the
/// prescribed sizes.
struct RibbonTableau {
  std::vector<Partition> chain;  // k + 1 partitions, chain.front() empty
  std::vector<int> entries;      // entries[i] = |λ^(i+1)| - |λ^(i)|
  int total_height = 0;

  int sign() const { return total_height % 2 == 0 ? 1 : -1; }
};

/// A partition reached by removing one ribbon of a given size.
struct RemovedRibbon {
  Partition rest;
  int height = 0;
};

/// All ways to remove a ribbon of `size` cells from p, leaving a partition.
std::vector<RemovedRibbon> removable_ribbons(const Partition& p, int size);

/// Visits every ribbon tableau of `shape` with entry sequence `entries`.
/// Throws std::invalid_argument when the entries do not sum to |shape| or
/// one of them is not positive.
void for_each_ribbon_tableau(const Partition& shape, const std::vector<int>& entries,
                             const std::function<void(const RibbonTableau&)>& visit);
std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& shape, const std::vector<int>& entries);

/// χ^λ_μ by the Murnaghan–Nakayama rule, peeling the last part of μ.
/// Memoised; safe to call concurrently. Throws std::invalid_argument when
/// |λ| != |μ|.
BigInt chi_mn(const Partition& shape, const Partition& class_partition);

/// Source of skew counts f^{outer/inner}; must return 0 when inner ⊄ outer.
using SkewCounter = std::function<BigInt(const Partition& outer, const Partition& inner)>;

/// Counts by exhaustive enumeration.
SkewCounter enumeration_skew_counter();

/// χ^λ_{(μ,1^{n-k})} as Σ_{ν ⊢ k} f^{λ/ν} χ^ν_μ with the counts taken from
/// `counter`. Throws std::invalid_argument when |μ| > |λ|.
BigInt chi_via_skew(const Partition& shape, const Partition& mu, const SkewCounter& counter);

struct CharacterTable {
  std::vector<Partition> partitions;       // rows (λ) and columns (μ) alike
  std::vector<std::vector<BigInt>> values;  // values[i][j] = χ^{partitions[i]}_{partitions[j]}
};

CharacterTable character_table(int n);

}  // namespace taquin

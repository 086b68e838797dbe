#pragma once

#include "taquin/tableau.hpp"

#include <random>
#include <vector>

namespace taquin {

using Rng = std::mt19937_64;

/// Uniform over the partitions of n.
Partition random_partition(int n, Rng& rng);

/// Uniform standard tableau of the given shape (hook walk).
Tableau random_standard_tableau(const Partition& shape, Rng& rng);

/// Random skew tableau: every step fills a uniformly chosen addable cell.
Tableau random_skew_tableau(const SkewShape& shape, Rng& rng);

/// Uniform partition contained in `outer` (rejection from the box).
Partition random_subpartition(const Partition& outer, Rng& rng);

/// k distinct values from 1..n in random order.
std::vector<int> random_tuple(int n, int k, Rng& rng);

}  // namespace taquin

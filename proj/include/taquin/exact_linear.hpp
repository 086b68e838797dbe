#pragma once

#include "taquin/numeric.hpp"

#include <cstddef>
#include <vector>

namespace taquin {

/// Outcome of solving A x = b over the rationals.
struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  /// A particular solution with every free variable set to 0; empty when
  /// the system is inconsistent.
  std::vector<Rational> x;
  /// determined[j] is true iff x_j takes the same value in every solution.
  std::vector<bool> determined;

  bool unique() const {
    for (bool d : determined)
      if (!d) return false;
    return consistent;
  }
};

/// Gauss-Jordan elimination with exact arithmetic. `a` holds one row per
/// equation, each with `unknowns` entries.
LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::size_t unknowns);

}  // namespace taquin

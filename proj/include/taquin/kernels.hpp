#pragma once

#include "taquin/jeu_de_taquin.hpp"
#include "taquin/numeric.hpp"
#include "taquin/tableau.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace taquin {

/// Every kernel has a serial reference and an OpenMP version that fill the
/// same index-ordered result slots, so both give identical output.
enum class Execution { serial, parallel };

/// counts[i][j] = f^{outers[i] / inners[j]} (0 when not contained).
std::vector<std::vector<BigInt>> skew_count_table(const std::vector<Partition>& outers,
                                                  const std::vector<Partition>& inners, Execution exec);

/// Calls visit once per ordered k-tuple of distinct values in 1..n, in
/// lexicographic order.
void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& visit);

/// For each tableau, the number of ordered k-tuples sliding it onto each
/// inner shape.
std::vector<std::map<Partition, long>> inner_shape_histograms(const std::vector<Tableau>& tableaux, int k,
                                                              Execution exec);

/// A tableau paired with the entries slid out of it.
struct SlideCase {
  Tableau tableau;
  std::vector<int> removed;
};

struct CheckSummary {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;  // empty when every case passed
};

/// All standard tableaux of every λ ⊢ n ≤ n_max with every ordered k-tuple,
/// 1 ≤ k ≤ k_max.
std::vector<SlideCase> exhaustive_slide_cases(int n_max, int k_max);

/// bijection_backward(bijection_forward(T, a)) == (T, a) and the image is
/// well formed.
CheckSummary check_round_trips(const std::vector<SlideCase>& cases, Execution exec);

/// A tableau and one of its cells.
struct SeparationCase {
  Tableau tableau;
  Cell cell;
};

/// Every standard tableau of every λ ⊢ n ≤ n_max with every cell.
std::vector<SeparationCase> exhaustive_separation_cases(int n_max);

CheckSummary check_separation(const std::vector<SeparationCase>& cases, Execution exec);

}  // namespace taquin

#include "taquin/exact_linear.hpp"

#include <stdexcept>
#include <utility>

namespace taquin {

LinearSolution solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::size_t unknowns) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_exact: row count differs from right-hand side");
  for (const auto& row : a)
    if (row.size() != unknowns) throw std::invalid_argument("solve_exact: ragged matrix");

  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][col];
    for (std::size_t j = col; j < unknowns; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = col; j < unknowns; ++j)
        if (a[r][j] != 0) a[i][j] -= factor * a[r][j];
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }

  LinearSolution out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return out;
  out.consistent = true;
  out.x.assign(unknowns, Rational(0));
  out.determined.assign(unknowns, false);
  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;
  for (std::size_t i = 0; i < r; ++i) {
    out.x[pivot_col[i]] = b[i];
    bool fixed = true;
    for (std::size_t j = 0; j < unknowns && fixed; ++j)
      if (!is_pivot[j] && a[i][j] != 0) fixed = false;
    out.determined[pivot_col[i]] = fixed;
  }
  return out;
}

}  // namespace taquin

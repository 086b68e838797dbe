#pragma once

#include "taquin/numeric.hpp"
#include "taquin/partition.hpp"

#include <vector>

namespace taquin::testing {

/// n! / Π hook lengths.
inline BigInt hook_length_count(const Partition& p) {
  const Partition c = conjugate(p);
  BigInt hooks = 1;
  for (const Cell& x : cells(p)) hooks *= p[x.row] - x.col + c[x.col] - x.row - 1;
  return falling_factorial(p.size(), p.size()) / hooks;
}

/// n! det[1 / (λ_i - μ_j - i + j)!], zero for negative arguments.
inline BigInt aitken_count(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return 0;
  const int n = outer.size() - inner.size();
  const std::size_t m = outer.parts().size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const long d = long(outer[i]) - long(inner[j]) - long(i) + long(j);
      a[i][j] = d < 0 ? Rational(0) : Rational(1) / Rational(falling_factorial(d, d));
    }
  Rational det = 1;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < m; ++r) {
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < m; ++k) a[r][k] -= f * a[col][k];
    }
  }
  const Rational value = det * Rational(falling_factorial(n, n));
  return numerator(value);
}

inline std::vector<Partition> partitions_up_to_size(int n_max) {
  std::vector<Partition> out;
  for (int n = 1; n <= n_max; ++n)
    for (const Partition& p : partitions_of(n)) out.push_back(p);
  return out;
}

}  // namespace taquin::testing

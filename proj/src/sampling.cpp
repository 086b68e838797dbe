#include "taquin/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace taquin {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Partition random_partition(int n, Rng& rng) {
  const std::vector<Partition> all = partitions_of(n);
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
}

Tableau random_standard_tableau(const Partition& shape, Rng& rng) {
  Tableau t{SkewShape(shape)};
  Partition region = shape;
  for (int entry = shape.size(); entry >= 1; --entry) {
    const std::vector<Cell> cs = cells(region);
    Cell c = cs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(cs.size()) - 1))];
    const Partition conj = conjugate(region);
    while (true) {
      const int arm = region[static_cast<std::size_t>(c.row)] - c.col - 1;
      const int leg = conj[static_cast<std::size_t>(c.col)] - c.row - 1;
      if (arm + leg == 0) break;
      const int step = uniform(rng, 1, arm + leg);
      c = step <= arm ? Cell{c.col + step, c.row} : Cell{c.col, c.row + step - arm};
    }
    t.set(c, entry);
    region = remove_cell(region, c);
  }
  return t;
}

Tableau random_skew_tableau(const SkewShape& shape, Rng& rng) {
  Tableau t(shape);
  Partition region = shape.inner();
  for (int entry = 1; entry <= shape.size(); ++entry) {
    const std::vector<Cell> options = addable_cells(region, shape.outer());
    const Cell c = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
    t.set(c, entry);
    region = add_cell(region, c);
  }
  return t;
}

Partition random_subpartition(const Partition& outer, Rng& rng) {
  while (true) {
    std::vector<int> parts;
    for (int i = 0; i < outer.length(); ++i) parts.push_back(uniform(rng, 0, outer[static_cast<std::size_t>(i)]));
    if (std::is_sorted(parts.begin(), parts.end(), std::greater<>())) return Partition(std::move(parts));
  }
}

std::vector<int> random_tuple(int n, int k, Rng& rng) {
  if (k < 0 || k > n) throw std::invalid_argument("random_tuple: need 0 <= k <= n");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  std::shuffle(values.begin(), values.end(), rng);
  values.resize(static_cast<std::size_t>(k));
  return values;
}

}  // namespace taquin

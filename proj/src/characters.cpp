#include "taquin/characters.hpp"

#include "taquin/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace taquin {

bool is_ribbon(const SkewShape& s) {
  const std::vector<Cell> cs = cells(s);
  if (cs.empty()) return false;
  for (const Cell& c : cs)
    if (s.contains_cell(c.right()) && s.contains_cell(c.above()) && s.contains_cell(c.above().right())) return false;
  std::set<Cell> seen{cs.front()};
  std::vector<Cell> stack{cs.front()};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (const Cell& n : {c.left(), c.right(), c.above(), c.below()})
      if (s.contains_cell(n) && seen.insert(n).second) stack.push_back(n);
  }
  return seen.size() == cs.size();
}

int ribbon_height(const SkewShape& s) {
  if (!is_ribbon(s)) throw std::invalid_argument("ribbon_height: " + s.to_string() + " is not a ribbon");
  const std::vector<Cell> cs = cells(s);
  return cs.back().row - cs.front().row;
}

std::vector<RemovedRibbon> removable_ribbons(const Partition& p, int size) {
  std::vector<RemovedRibbon> out;
  if (size <= 0) return out;
  const Partition conj = conjugate(p);
  for (int j = 0; j < p.length(); ++j) {
    const int width = p[static_cast<std::size_t>(j)];
    for (int i = 0; i < width; ++i) {
      const int arm = width - i - 1;
      const int leg = conj[static_cast<std::size_t>(i)] - j - 1;
      if (arm + leg + 1 != size) continue;
      std::vector<int> parts = p.parts();
      for (int r = j; r < j + leg; ++r) parts[static_cast<std::size_t>(r)] = p[static_cast<std::size_t>(r + 1)] - 1;
      parts[static_cast<std::size_t>(j + leg)] = i;
      out.push_back({Partition(std::move(parts)), leg});
    }
  }
  return out;
}

namespace {

void ribbon_rec(const Partition& shape, const std::vector<int>& entries, std::size_t k, std::vector<Partition>& chain,
                int height, const std::function<void(const RibbonTableau&)>& visit) {
  if (k == 0) {
    RibbonTableau t;
    t.chain.assign(chain.rbegin(), chain.rend());
    t.entries = entries;
    t.total_height = height;
    visit(t);
    return;
  }
  for (RemovedRibbon& r : removable_ribbons(shape, entries[k - 1])) {
    chain.push_back(r.rest);
    ribbon_rec(r.rest, entries, k - 1, chain, height + r.height, visit);
    chain.pop_back();
  }
}

}  // namespace

void for_each_ribbon_tableau(const Partition& shape, const std::vector<int>& entries,
                             const std::function<void(const RibbonTableau&)>& visit) {
  long total = 0;
  for (int a : entries) {
    if (a <= 0) throw std::invalid_argument("ribbon tableau entries must be positive");
    total += a;
  }
  if (total != shape.size())
    throw std::invalid_argument("entries sum to " + std::to_string(total) + ", shape " + shape.to_string() +
                                " has " + std::to_string(shape.size()) + " cells");
  std::vector<Partition> chain{shape};
  ribbon_rec(shape, entries, entries.size(), chain, 0, visit);
}

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& shape, const std::vector<int>& entries) {
  std::vector<RibbonTableau> out;
  for_each_ribbon_tableau(shape, entries, [&](const RibbonTableau& t) { out.push_back(t); });
  return out;
}

namespace {

class CharacterMemo {
 public:
  using Key = std::pair<Partition, Partition>;

  std::optional<BigInt> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const BigInt& value) {
    std::unique_lock lock(mutex_);
    values_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, BigInt> values_;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

BigInt chi_rec(const Partition& shape, const Partition& mu) {
  if (mu.empty()) return 1;
  CharacterMemo::Key key{shape, mu};
  if (auto hit = memo().find(key)) return *hit;
  std::vector<int> rest_parts = mu.parts();
  const int last = rest_parts.back();
  rest_parts.pop_back();
  const Partition rest(std::move(rest_parts));
  BigInt total = 0;
  for (const RemovedRibbon& r : removable_ribbons(shape, last)) {
    const BigInt sub = chi_rec(r.rest, rest);
    if (r.height % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  memo().insert(key, total);
  return total;
}

}  // namespace

BigInt chi_mn(const Partition& shape, const Partition& class_partition) {
  if (shape.size() != class_partition.size())
    throw std::invalid_argument("chi_mn: |" + shape.to_string() + "| != |" + class_partition.to_string() + "|");
  return chi_rec(shape, class_partition);
}

SkewCounter enumeration_skew_counter() {
  return [](const Partition& outer, const Partition& inner) { return count_skew(outer, inner); };
}

BigInt chi_via_skew(const Partition& shape, const Partition& mu, const SkewCounter& counter) {
  if (mu.size() > shape.size())
    throw std::invalid_argument("chi_via_skew: |" + mu.to_string() + "| exceeds |" + shape.to_string() + "|");
  BigInt total = 0;
  for (const Partition& nu : partitions_of(mu.size())) {
    const BigInt chi = chi_mn(nu, mu);
    if (chi != 0) total += counter(shape, nu) * chi;
  }
  return total;
}

CharacterTable character_table(int n) {
  CharacterTable table;
  table.partitions = partitions_of(n);
  for (const Partition& lambda : table.partitions) {
    std::vector<BigInt> row;
    for (const Partition& mu : table.partitions) row.push_back(chi_mn(lambda, mu));
    table.values.push_back(std::move(row));
  }
  return table;
}

}  // namespace taquin

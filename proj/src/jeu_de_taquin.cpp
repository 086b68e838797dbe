#include "taquin/jeu_de_taquin.hpp"

#include <algorithm>
#include <stdexcept>

namespace taquin {

std::optional<Cell> in_step_target(const Tableau& t, Cell c) {
  const Cell below = c.below();
  const Cell left = c.left();
  const bool has_below = t.has_cell(below);
  const bool has_left = t.has_cell(left);
  if (has_below && (!has_left || t.at(below) >= t.at(left))) return below;
  if (has_left) return left;
  return std::nullopt;
}

std::optional<Cell> out_step_target(const Tableau& t, Cell c) {
  const Cell right = c.right();
  const Cell above = c.above();
  const bool has_right = t.has_cell(right);
  const bool has_above = t.has_cell(above);
  if (has_right && (!has_above || t.at(right) < t.at(above))) return right;
  if (has_above) return above;
  return std::nullopt;
}

MarkedTableau in_step(MarkedTableau t) {
  const auto target = in_step_target(t.tableau, t.mark);
  if (!target) throw std::logic_error("in_step: no neighbour below or to the left of " + to_string(t.mark));
  t.tableau.swap_entries(t.mark, *target);
  t.mark = *target;
  return t;
}

MarkedTableau out_step(MarkedTableau t) {
  const auto target = out_step_target(t.tableau, t.mark);
  if (!target) throw std::logic_error("out_step: no neighbour above or to the right of " + to_string(t.mark));
  t.tableau.swap_entries(t.mark, *target);
  t.mark = *target;
  return t;
}

SlideResult in_slide(const Tableau& t, int entry) {
  const auto start = t.find(entry);
  if (!start) throw std::invalid_argument("in_slide: entry " + std::to_string(entry) + " not in tableau");
  SlideResult out{t, {*start}};
  Cell here = *start;
  while (const auto target = in_step_target(out.tableau, here)) {
    out.tableau.swap_entries(here, *target);
    here = *target;
    out.path.push_back(here);
  }
  return out;
}

SlideResult out_slide(const Tableau& t, Cell start) {
  if (!t.has_cell(start)) throw std::invalid_argument("out_slide: " + to_string(start) + " not in tableau");
  SlideResult out{t, {start}};
  Cell here = start;
  const int value = t.at(start);
  while (const auto target = out_step_target(out.tableau, here)) {
    if (out.tableau.at(*target) > value) break;
    out.tableau.swap_entries(here, *target);
    here = *target;
    out.path.push_back(here);
  }
  return out;
}

namespace {

void check_removed(std::span<const int> removed, int n) {
  std::vector<int> sorted(removed.begin(), removed.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("removed entries must be distinct");
  if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > n))
    throw std::invalid_argument("removed entries must lie in 1.." + std::to_string(n));
}

}  // namespace

BijectionImage bijection_forward(const Tableau& standard, std::span<const int> removed,
                                 const SlideObserver& observer) {
  if (!standard.is_standard() || !validate(standard))
    throw std::invalid_argument("bijection_forward: input must be a standard tableau");
  const int n = standard.size();
  check_removed(removed, n);

  Tableau t = standard;
  std::vector<Cell> vacated;
  for (std::size_t i = 0; i < removed.size(); ++i) {
    SlideResult slide = in_slide(t, removed[i]);
    t = slide.tableau;
    t.vacate(slide.path.back());
    vacated.push_back(slide.path.back());
    if (observer) observer(i, slide, t);
  }

  Tableau exit_order(SkewShape(t.inner()));
  for (std::size_t i = 0; i < vacated.size(); ++i) exit_order.set(vacated[i], static_cast<int>(i) + 1);

  // Order-preserving renumbering onto 1..n-k.
  std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> gone(static_cast<std::size_t>(n) + 1, false);
  for (int a : removed) gone[static_cast<std::size_t>(a)] = true;
  for (int v = 1, r = 0; v <= n; ++v)
    if (!gone[static_cast<std::size_t>(v)]) rank[static_cast<std::size_t>(v)] = ++r;
  for (const Cell& c : cells(t.shape())) t.set(c, rank[static_cast<std::size_t>(t.at(c))]);

  return {std::move(t), std::move(exit_order), std::vector<int>(removed.begin(), removed.end())};
}

std::pair<Tableau, std::vector<int>> bijection_backward(const BijectionImage& image) {
  const Tableau& exit_order = image.exit_order;
  const int k = static_cast<int>(image.removed.size());
  if (!exit_order.is_standard() || !validate(exit_order) || exit_order.size() != k)
    throw std::invalid_argument("bijection_backward: exit order must be a standard tableau with k cells");
  if (exit_order.outer() != image.skew.inner())
    throw std::invalid_argument("bijection_backward: exit order shape " + exit_order.outer().to_string() +
                                " differs from skew inner shape " + image.skew.inner().to_string());
  if (!validate(image.skew)) throw std::invalid_argument("bijection_backward: skew tableau is not valid");
  const int n = image.skew.outer().size();
  check_removed(image.removed, n);

  std::vector<bool> gone(static_cast<std::size_t>(n) + 1, false);
  for (int a : image.removed) gone[static_cast<std::size_t>(a)] = true;
  std::vector<int> value_of_rank(1, 0);
  for (int v = 1; v <= n; ++v)
    if (!gone[static_cast<std::size_t>(v)]) value_of_rank.push_back(v);

  Tableau t = image.skew;
  for (const Cell& c : cells(t.shape())) t.set(c, value_of_rank[static_cast<std::size_t>(t.at(c))]);

  for (int i = k; i >= 1; --i) {
    const Cell root = *exit_order.find(i);
    t.restore(root, image.removed[static_cast<std::size_t>(i - 1)]);
    t = out_slide(t, root).tableau;
  }
  return {std::move(t), image.removed};
}

Partition exit_shape(const Tableau& standard, std::span<const int> removed) {
  Tableau t = standard;
  for (int a : removed) {
    Cell here = *t.find(a);
    while (const auto target = in_step_target(t, here)) {
      t.swap_entries(here, *target);
      here = *target;
    }
    t.vacate(here);
  }
  return t.inner();
}

}  // namespace taquin

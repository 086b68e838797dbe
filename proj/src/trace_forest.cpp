#include "taquin/trace_forest.hpp"

#include "taquin/jeu_de_taquin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace taquin {

TraceForest TraceForest::build(const Tableau& t) {
  TraceForest f;
  f.shape_ = t.shape();
  f.parent_.resize(static_cast<std::size_t>(t.outer().length()));
  for (std::size_t row = 0; row < f.parent_.size(); ++row)
    f.parent_[row].resize(static_cast<std::size_t>(t.outer()[row]));
  for (const Cell& c : cells(t.shape()))
    f.parent_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = in_step_target(t, c);
  return f;
}

std::optional<Cell> TraceForest::parent(Cell c) const {
  if (!contains(c)) return std::nullopt;
  return parent_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
}

std::optional<Cell> TraceForest::right_child(Cell c) const {
  const Cell r = c.right();
  if (contains(c) && parent(r) == c) return r;
  return std::nullopt;
}

std::optional<Cell> TraceForest::upper_child(Cell c) const {
  const Cell a = c.above();
  if (contains(c) && parent(a) == c) return a;
  return std::nullopt;
}

bool TraceForest::horizontal_arc(Cell c) const { return parent(c) == c.left(); }

std::vector<Cell> TraceForest::roots() const {
  std::vector<Cell> out;
  for (const Cell& c : cells(shape_))
    if (!parent(c)) out.push_back(c);
  return out;
}

Cell TraceForest::root_of(Cell c) const {
  if (!contains(c)) throw std::invalid_argument("root_of: " + to_string(c) + " not in forest");
  while (const auto p = parent(c)) c = *p;
  return c;
}

std::vector<Cell> TraceForest::subtree(Cell root) const {
  std::vector<Cell> out;
  if (!contains(root)) return out;
  std::vector<Cell> stack{root};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    out.push_back(c);
    if (const auto u = upper_child(c)) stack.push_back(*u);
    if (const auto r = right_child(c)) stack.push_back(*r);
  }
  return out;
}

bool TraceForest::in_subtree(Cell root, Cell c) const {
  if (!contains(c) || !contains(root)) return false;
  for (std::optional<Cell> x = c; x; x = parent(*x))
    if (*x == root) return true;
  return false;
}

std::vector<Cell> path_to_root(const TraceForest& f, Cell c) {
  if (!f.contains(c)) throw std::invalid_argument("path_to_root: " + to_string(c) + " not in forest");
  std::vector<Cell> out{c};
  while (const auto p = f.parent(out.back())) out.push_back(*p);
  return out;
}

namespace {

std::vector<Cell> sorted_union(std::vector<Cell> a, const std::vector<Cell>& b, const std::vector<Cell>& c) {
  a.insert(a.end(), b.begin(), b.end());
  a.insert(a.end(), c.begin(), c.end());
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

std::vector<Cell> CellClassification::right_group() const { return sorted_union(d1, p1, r); }
std::vector<Cell> CellClassification::upper_group() const { return sorted_union(d2, p2, a); }

CellClassification classify(const TraceForest& f, Cell subtree_root, Cell c) {
  if (!f.in_subtree(subtree_root, c))
    throw std::invalid_argument("classify: " + to_string(c) + " is not in the subtree at " + to_string(subtree_root));
  CellClassification out;
  if (const auto rc = f.right_child(c)) out.d1 = f.subtree(*rc);
  if (const auto uc = f.upper_child(c)) out.d2 = f.subtree(*uc);

  std::set<Cell> on_path{subtree_root};
  for (Cell x = c; x != subtree_root; x = *f.parent(x)) {
    (f.horizontal_arc(x) ? out.p1 : out.p2).push_back(x);
    on_path.insert(x);
  }

  std::set<Cell> placed(out.d1.begin(), out.d1.end());
  placed.insert(out.d2.begin(), out.d2.end());
  placed.insert(on_path.begin(), on_path.end());
  for (const Cell& d : f.subtree(subtree_root)) {
    if (placed.count(d)) continue;
    // Climb until the path of d merges with the path of c; the branch it
    // arrives from decides the side.
    Cell prev = d;
    Cell x = *f.parent(d);
    while (!on_path.count(x)) {
      prev = x;
      x = *f.parent(x);
    }
    (prev == x.right() ? out.r : out.a).push_back(d);
  }
  for (auto* v : {&out.d1, &out.d2, &out.p1, &out.p2, &out.r, &out.a}) std::sort(v->begin(), v->end());
  return out;
}

namespace {

enum class Side { on_path, upper, lower, neutral };

// Position of a cell relative to a monotone lattice path.
class PathSides {
 public:
  explicit PathSides(const std::vector<Cell>& path) {
    for (const Cell& p : path) {
      auto [cit, cnew] = by_col_.try_emplace(p.col, p.row, p.row);
      if (!cnew) cit->second = {std::min(cit->second.first, p.row), std::max(cit->second.second, p.row)};
      auto [rit, rnew] = by_row_.try_emplace(p.row, p.col, p.col);
      if (!rnew) rit->second = {std::min(rit->second.first, p.col), std::max(rit->second.second, p.col)};
    }
  }

  Side side(Cell w) const {
    if (const auto it = by_col_.find(w.col); it != by_col_.end()) {
      if (w.row > it->second.second) return Side::upper;
      if (w.row < it->second.first) return Side::lower;
      return Side::on_path;
    }
    if (const auto it = by_row_.find(w.row); it != by_row_.end()) {
      if (w.col < it->second.first) return Side::upper;
      if (w.col > it->second.second) return Side::lower;
    }
    return Side::neutral;
  }

 private:
  std::map<int, std::pair<int, int>> by_col_;
  std::map<int, std::pair<int, int>> by_row_;
};

}  // namespace

bool verify_separation(const Tableau& t, Cell c) {
  const TraceForest f = TraceForest::build(t);
  const Cell root = f.root_of(c);
  const CellClassification cls = classify(f, root, c);
  const PathSides sides(path_to_root(f, c));

  SlideResult slide = in_slide(t, t.at(c));
  if (slide.path.back() != root) return false;
  Tableau after = std::move(slide.tableau);
  after.vacate(root);
  const TraceForest g = TraceForest::build(after);

  const auto right = cls.right_group();
  const auto upper = cls.upper_group();
  const std::set<Cell> right_set(right.begin(), right.end());
  const std::set<Cell> upper_set(upper.begin(), upper.end());

  for (const Cell& d : right)
    for (const Cell& x : path_to_root(g, d))
      if (upper_set.count(x) || sides.side(x) == Side::upper) return false;
  for (const Cell& d : upper)
    for (const Cell& x : path_to_root(g, d))
      if (right_set.count(x) || sides.side(x) == Side::lower) return false;
  return true;
}

std::string to_dot(const TraceForest& f, const Tableau& t) {
  auto id = [](Cell c) { return "\"c" + std::to_string(c.col) + "_" + std::to_string(c.row) + "\""; };
  std::ostringstream out;
  out << "digraph trace_forest {\n";
  out << "  node [shape=box];\n";
  for (const Cell& c : cells(f.shape()))
    out << "  " << id(c) << " [label=\"" << to_string(c) << ": " << t.at(c) << "\", pos=\"" << c.col << ','
        << c.row << "!\"];\n";
  for (const Cell& c : cells(f.shape()))
    if (const auto p = f.parent(c)) out << "  " << id(c) << " -> " << id(*p) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace taquin

#pragma once

#include "taquin/tableau.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taquin {

/// Parent-arc structure over the cells of a tableau: every cell with a
/// neighbour below or to the left points at the destination of the
/// in-coming step for its entry. Each node has at most a right child (the
/// cell to its right, arriving by a horizontal arc) and an upper child (the
/// cell above, arriving by a vertical arc).
class TraceForest {
 public:
  static TraceForest build(const Tableau& t);

  const SkewShape& shape() const { return shape_; }
  bool contains(Cell c) const { return shape_.contains_cell(c); }

  std::optional<Cell> parent(Cell c) const;
  std::optional<Cell> right_child(Cell c) const;
  std::optional<Cell> upper_child(Cell c) const;
  /// True iff c's arc goes to its left neighbour.
  bool horizontal_arc(Cell c) const;

  /// Cells without a neighbour below or to the left, in cell order.
  std::vector<Cell> roots() const;
  Cell root_of(Cell c) const;
  /// Cells of the subtree rooted at `root` (root first, then depth-first,
  /// right subtree before upper subtree). Empty for a cell outside the forest.
  std::vector<Cell> subtree(Cell root) const;
  bool in_subtree(Cell root, Cell c) const;

 private:
  SkewShape shape_;
  std::vector<std::vector<std::optional<Cell>>> parent_;  // [row][col]
};

/// Parent chain from c to its root, c first.
std::vector<Cell> path_to_root(const TraceForest& f, Cell c);

/// Partition of S \ {root of S} relative to a cell c of S.
struct CellClassification {
  std::vector<Cell> d1;  // subtree at the right child of c
  std::vector<Cell> d2;  // subtree at the upper child of c
  std::vector<Cell> p1;  // ancestors of c (c included, root of S excluded) issuing a horizontal arc
  std::vector<Cell> p2;  // same, vertical arc
  std::vector<Cell> r;   // remaining cells whose root path runs below c's
  std::vector<Cell> a;   // remaining cells whose root path runs above c's

  /// C_<(c,S) = D1 ∪ P1 ∪ R, sorted.
  std::vector<Cell> right_group() const;
  /// C_∨(c,S) = D2 ∪ P2 ∪ A, sorted.
  std::vector<Cell> upper_group() const;
};

/// Throws std::invalid_argument when c is not in the subtree at `subtree_root`.
CellClassification classify(const TraceForest& f, Cell subtree_root, Cell c);

/// Slides the entry at c to its root, vacates the root and rebuilds the
/// forest; true iff every cell of C_<(c,S) (S the tree containing c) has a
/// root path in the new forest that avoids C_∨(c,S) and stays weakly below /
/// right of c's original path, and symmetrically for C_∨(c,S).
bool verify_separation(const Tableau& t, Cell c);

/// Graphviz description: one node per cell, labelled "(col,row): entry",
/// pinned at its diagram position; one edge per arc.
std::string to_dot(const TraceForest& f, const Tableau& t);

}  // namespace taquin

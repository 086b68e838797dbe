#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace taquin {

/// A cell of a Ferrers diagram in French convention: column `col`, row `row`,
/// origin at the first cell of the bottom row.
struct Cell {
  int col = 0;
  int row = 0;

  constexpr int content() const { return col - row; }
  constexpr Cell right() const { return {col + 1, row}; }
  constexpr Cell left() const { return {col - 1, row}; }
  constexpr Cell above() const { return {col, row + 1}; }
  constexpr Cell below() const { return {col, row - 1}; }

  constexpr bool operator==(const Cell&) const = default;
  // Row-major: bottom row first, then left to right.
  constexpr std::strong_ordering operator<=>(const Cell& o) const {
    if (auto c = row <=> o.row; c != 0) return c;
    return col <=> o.col;
  }
};

std::string to_string(Cell c);

/// Integer partition; parts are strictly positive and non-increasing.
/// Trailing zeros are stripped on construction so equality is structural.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// "5,3,3,2"; "0" or "" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), or 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int multiplicity(int part) const;
  int distinct_parts() const;

  bool contains_cell(Cell c) const {
    return c.row >= 0 && c.col >= 0 && c.col < (*this)[static_cast<std::size_t>(c.row)];
  }

  /// "5,3,3,2"; the empty partition prints as "0".
  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Outer/inner pair with componentwise containment.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

  /// "5,3,3,2/3,2" or "5,3,3,2".
  static SkewShape parse(std::string_view text);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  bool contains_cell(Cell c) const { return outer_.contains_cell(c) && !inner_.contains_cell(c); }
  std::string to_string() const;

  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Row j holds cells (0,j)..(λ_j - 1, j); bottom row first.
std::vector<Cell> cells(const Partition& p);
std::vector<Cell> cells(const SkewShape& s);

/// Sorted contents of all cells.
std::vector<int> content_multiset(const Partition& p);

Partition conjugate(const Partition& p);

/// Partitions obtained by adding one cell, in increasing order.
std::vector<Partition> add_cell_set(const Partition& p);
/// Partitions obtained by removing one corner cell, in increasing order.
std::vector<Partition> remove_cell_set(const Partition& p);

/// Cells that can be added to `inner` while staying inside `outer`.
std::vector<Cell> addable_cells(const Partition& inner, const Partition& outer);
std::vector<Cell> removable_cells(const Partition& p);

Partition add_cell(const Partition& p, Cell c);
Partition remove_cell(const Partition& p, Cell c);

/// True iff inner_i <= outer_i for every i.
bool contains(const Partition& outer, const Partition& inner);

/// Multiset union of parts.
Partition merge(const Partition& a, const Partition& b);

/// (μ, 1^{n-k}).
Partition pad_with_ones(const Partition& mu, int n);

/// All partitions of n in decreasing lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

}  // namespace taquin

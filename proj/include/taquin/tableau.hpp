#pragma once

#include "taquin/numeric.hpp"
#include "taquin/partition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taquin {

/// Filling of a skew diagram outer/inner. Standard tableaux are the case of
/// an empty inner shape.
///
/// Entries are positive; cells of the inner shape hold no entry. The class
/// does not enforce the increasing conditions, because jeu de taquin moves
/// pass through states where a distinguished entry breaks them; use
/// `validate` / `is_increasing` to check.
class Tableau {
 public:
  Tableau() = default;
  /// All cells of `shape` start unfilled (entry 0).
  explicit Tableau(SkewShape shape);
  /// `rows[j]` lists the entries of row j left to right, inner cells omitted.
  Tableau(SkewShape shape, const std::vector<std::vector<int>>& rows);

  const SkewShape& shape() const { return shape_; }
  const Partition& outer() const { return shape_.outer(); }
  const Partition& inner() const { return shape_.inner(); }
  int size() const { return shape_.size(); }
  bool is_standard() const { return shape_.inner().empty(); }

  /// True iff c is a cell of the skew diagram.
  bool has_cell(Cell c) const { return shape_.contains_cell(c); }
  /// Entry at c; 0 when c is not a cell of the skew diagram.
  int at(Cell c) const;
  void set(Cell c, int entry);
  void swap_entries(Cell a, Cell b);
  std::optional<Cell> find(int entry) const;

  /// Moves c (an addable cell of the inner shape) into the inner shape and
  /// clears its entry.
  void vacate(Cell c);
  /// Reverse of `vacate`: c must be a corner of the inner shape.
  void restore(Cell c, int entry);

  /// Entries row by row, bottom row first, inner cells omitted.
  std::vector<std::vector<int>> rows() const;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau& o) const { return grid_ <=> o.grid_; }

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> grid_;  // grid_[row][col], 0 for inner cells
};

/// Distinct positive entries, strictly increasing along rows (left to right)
/// and columns (bottom to top).
bool is_increasing(const Tableau& t);

/// `is_increasing` plus the entries are exactly 1..size().
bool validate(const Tableau& t);

/// "1 2 5 9 11 / 3 7 10 / 4 8 13 / 6 12": rows bottom first, inner cells
/// omitted. Empty tableau prints as "".
std::string to_string(const Tableau& t);

/// Parses the row format above. Without a shape the filling is taken as a
/// standard tableau whose shape is read off the row lengths. Throws
/// std::invalid_argument on malformed text or a row-length mismatch.
Tableau parse_tableau(std::string_view text, const std::optional<SkewShape>& shape = std::nullopt);

enum class EnumerationOrder {
  forward,  // place 1..m into addable cells of a growing inner shape
  reverse,  // place m..1 into removable corners of a shrinking outer shape
};

/// Lazy stream of all skew tableaux of one shape, each exactly once, in a
/// deterministic order (at every step candidate cells are tried bottom row
/// first). Single consumer.
class SkewTableauStream {
 public:
  explicit SkewTableauStream(SkewShape shape, EnumerationOrder order = EnumerationOrder::forward);
  std::optional<Tableau> next();

 private:
  struct Frame {
    std::vector<Cell> candidates;
    std::size_t index = 0;
  };
  std::vector<Cell> candidates_for(const Partition& region) const;
  Partition advance(const Partition& region, Cell c) const;

  SkewShape shape_;
  EnumerationOrder order_;
  Tableau current_;
  Partition region_;  // filled region boundary: grows from inner (forward) or shrinks from outer (reverse)
  std::vector<Frame> stack_;
  bool started_ = false;
  bool done_ = false;
};

SkewTableauStream enumerate_standard(const Partition& shape);
SkewTableauStream enumerate_skew(const SkewShape& shape, EnumerationOrder order = EnumerationOrder::forward);

/// Calls `visit` once per tableau; faster than draining a stream.
void for_each_skew_tableau(const SkewShape& shape, const std::function<void(const Tableau&)>& visit);
void for_each_standard_tableau(const Partition& shape, const std::function<void(const Tableau&)>& visit);

/// f^λ by exhaustive enumeration.
BigInt count_standard(const Partition& shape);
/// f^{λ/μ} by exhaustive enumeration; 0 when inner is not contained in outer.
BigInt count_skew(const Partition& outer, const Partition& inner,
                  EnumerationOrder order = EnumerationOrder::forward);
BigInt count_skew(const SkewShape& shape, EnumerationOrder order = EnumerationOrder::forward);

}  // namespace taquin

#include "taquin/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace taquin {

Tableau::Tableau(SkewShape shape) : shape_(std::move(shape)) {
  grid_.resize(static_cast<std::size_t>(shape_.outer().length()));
  for (std::size_t row = 0; row < grid_.size(); ++row) grid_[row].assign(static_cast<std::size_t>(shape_.outer()[row]), 0);
}

Tableau::Tableau(SkewShape shape, const std::vector<std::vector<int>>& rows) : Tableau(std::move(shape)) {
  const int length = shape_.outer().length();
  if (static_cast<int>(rows.size()) > length)
    throw std::invalid_argument("tableau has more rows than its shape");
  for (int row = 0; row < length; ++row) {
    const std::size_t r = static_cast<std::size_t>(row);
    const int offset = shape_.inner()[r];
    const int width = shape_.outer()[r] - offset;
    const std::vector<int> empty;
    const std::vector<int>& given = r < rows.size() ? rows[r] : empty;
    if (static_cast<int>(given.size()) != width)
      throw std::invalid_argument("row " + std::to_string(row) + " has " + std::to_string(given.size()) +
                                  " entries, shape " + shape_.to_string() + " needs " + std::to_string(width));
    for (int i = 0; i < width; ++i) {
      if (given[static_cast<std::size_t>(i)] <= 0) throw std::invalid_argument("tableau entries must be positive");
      grid_[r][static_cast<std::size_t>(offset + i)] = given[static_cast<std::size_t>(i)];
    }
  }
}

int Tableau::at(Cell c) const {
  if (!has_cell(c)) return 0;
  return grid_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)];
}

void Tableau::set(Cell c, int entry) {
  if (!has_cell(c)) throw std::out_of_range("cell " + to_string(c) + " not in " + shape_.to_string());
  grid_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = entry;
}

void Tableau::swap_entries(Cell a, Cell b) {
  const int x = at(a);
  set(a, at(b));
  set(b, x);
}

std::optional<Cell> Tableau::find(int entry) const {
  if (entry <= 0) return std::nullopt;
  for (std::size_t row = 0; row < grid_.size(); ++row)
    for (std::size_t col = 0; col < grid_[row].size(); ++col)
      if (grid_[row][col] == entry) return Cell{static_cast<int>(col), static_cast<int>(row)};
  return std::nullopt;
}

void Tableau::vacate(Cell c) {
  if (!has_cell(c)) throw std::invalid_argument("vacate: " + to_string(c) + " not in " + shape_.to_string());
  Partition inner = add_cell(shape_.inner(), c);
  grid_[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col)] = 0;
  shape_ = SkewShape(shape_.outer(), std::move(inner));
}

void Tableau::restore(Cell c, int entry) {
  Partition inner = remove_cell(shape_.inner(), c);
  shape_ = SkewShape(shape_.outer(), std::move(inner));
  set(c, entry);
}

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<std::vector<int>> out(grid_.size());
  for (std::size_t row = 0; row < grid_.size(); ++row)
    for (std::size_t col = static_cast<std::size_t>(shape_.inner()[row]); col < grid_[row].size(); ++col)
      out[row].push_back(grid_[row][col]);
  return out;
}

bool is_increasing(const Tableau& t) {
  std::vector<int> seen;
  for (const Cell& c : cells(t.shape())) {
    const int x = t.at(c);
    if (x <= 0) return false;
    seen.push_back(x);
    if (t.has_cell(c.left()) && t.at(c.left()) >= x) return false;
    if (t.has_cell(c.below()) && t.at(c.below()) >= x) return false;
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool validate(const Tableau& t) {
  if (!is_increasing(t)) return false;
  // Distinct positive entries; they are 1..m iff the maximum is m.
  int max_entry = 0;
  for (const Cell& c : cells(t.shape())) max_entry = std::max(max_entry, t.at(c));
  return max_entry == t.size();
}

std::string to_string(const Tableau& t) {
  std::string out;
  const auto rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += " / ";
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(rows[r][i]);
    }
  }
  return out;
}

Tableau parse_tableau(std::string_view text, const std::optional<SkewShape>& shape) {
  std::vector<std::vector<int>> rows;
  std::string chunk;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), '\n', '/');
  std::istringstream split(normalized);
  while (std::getline(split, chunk, '/')) {
    std::istringstream in(chunk);
    std::vector<int> row;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad tableau entry '" + token + "'");
      }
      if (used != token.size()) throw std::invalid_argument("bad tableau entry '" + token + "'");
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  if (shape) return Tableau(*shape, rows);
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Tableau(SkewShape(Partition(parts)), rows);
}

SkewTableauStream::SkewTableauStream(SkewShape shape, EnumerationOrder order)
    : shape_(std::move(shape)), order_(order), current_(shape_) {
  region_ = order_ == EnumerationOrder::forward ? shape_.inner() : shape_.outer();
}

std::vector<Cell> SkewTableauStream::candidates_for(const Partition& region) const {
  if (order_ == EnumerationOrder::forward) return addable_cells(region, shape_.outer());
  std::vector<Cell> out;
  for (const Cell& c : removable_cells(region))
    if (!shape_.inner().contains_cell(c)) out.push_back(c);
  return out;
}

Partition SkewTableauStream::advance(const Partition& region, Cell c) const {
  return order_ == EnumerationOrder::forward ? add_cell(region, c) : remove_cell(region, c);
}

std::optional<Tableau> SkewTableauStream::next() {
  if (done_) return std::nullopt;
  const int m = shape_.size();
  auto entry_for_depth = [&](std::size_t depth) {
    return order_ == EnumerationOrder::forward ? static_cast<int>(depth) : m - static_cast<int>(depth) + 1;
  };
  auto place = [&](Cell c) {
    region_ = advance(region_, c);
    current_.set(c, entry_for_depth(stack_.size()));
  };
  auto unplace = [&](Cell c) {
    region_ = order_ == EnumerationOrder::forward ? remove_cell(region_, c) : add_cell(region_, c);
    current_.set(c, 0);
  };
  auto descend = [&]() {
    while (static_cast<int>(stack_.size()) < m) {
      stack_.push_back({candidates_for(region_), 0});
      place(stack_.back().candidates.front());
    }
  };

  if (!started_) {
    started_ = true;
    if (m == 0) {
      done_ = true;
      return current_;
    }
    descend();
    return current_;
  }
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    unplace(top.candidates[top.index]);
    ++top.index;
    if (top.index < top.candidates.size()) {
      place(top.candidates[top.index]);
      descend();
      return current_;
    }
    stack_.pop_back();
  }
  done_ = true;
  return std::nullopt;
}

SkewTableauStream enumerate_standard(const Partition& shape) { return SkewTableauStream(SkewShape(shape)); }

SkewTableauStream enumerate_skew(const SkewShape& shape, EnumerationOrder order) {
  return SkewTableauStream(shape, order);
}

namespace {

void visit_rec(Tableau& t, Partition& region, int next_entry, const std::function<void(const Tableau&)>& visit) {
  if (next_entry > t.size()) {
    visit(t);
    return;
  }
  for (const Cell& c : addable_cells(region, t.outer())) {
    Partition saved = region;
    region = add_cell(region, c);
    t.set(c, next_entry);
    visit_rec(t, region, next_entry + 1, visit);
    t.set(c, 0);
    region = std::move(saved);
  }
}

// Counts leaves of the same search tree without materialising tableaux.
BigInt count_forward(const Partition& region, const Partition& outer) {
  if (region == outer) return 1;
  BigInt total = 0;
  for (const Cell& c : addable_cells(region, outer)) total += count_forward(add_cell(region, c), outer);
  return total;
}

BigInt count_reverse(const Partition& region, const Partition& inner) {
  if (region == inner) return 1;
  BigInt total = 0;
  for (const Cell& c : removable_cells(region))
    if (!inner.contains_cell(c)) total += count_reverse(remove_cell(region, c), inner);
  return total;
}

}  // namespace

void for_each_skew_tableau(const SkewShape& shape, const std::function<void(const Tableau&)>& visit) {
  Tableau t(shape);
  Partition region = shape.inner();
  visit_rec(t, region, 1, visit);
}

void for_each_standard_tableau(const Partition& shape, const std::function<void(const Tableau&)>& visit) {
  for_each_skew_tableau(SkewShape(shape), visit);
}

BigInt count_standard(const Partition& shape) { return count_forward(Partition(), shape); }

BigInt count_skew(const Partition& outer, const Partition& inner, EnumerationOrder order) {
  if (!contains(outer, inner)) return 0;
  return count_skew(SkewShape(outer, inner), order);
}

BigInt count_skew(const SkewShape& shape, EnumerationOrder order) {
  return order == EnumerationOrder::forward ? count_forward(shape.inner(), shape.outer())
                                            : count_reverse(shape.outer(), shape.inner());
}

}  // namespace taquin

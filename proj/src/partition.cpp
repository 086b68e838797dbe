#include "taquin/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace taquin {

std::string to_string(Cell c) {
  return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
      throw std::invalid_argument("bad partition: '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (parts.size() == 1 && parts[0] == 0) return Partition();
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] == 0) throw std::invalid_argument("bad partition: zero part before a positive part");
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

int Partition::distinct_parts() const {
  int out = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (i == 0 || parts_[i] != parts_[i - 1]) ++out;
  return out;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_))
    throw std::invalid_argument("skew shape " + outer_.to_string() + "/" + inner_.to_string() +
                                ": inner not contained in outer");
}

SkewShape SkewShape::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
  return SkewShape(Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1)));
}

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

std::vector<Cell> cells(const Partition& p) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int row = 0; row < p.length(); ++row)
    for (int col = 0; col < p.parts()[static_cast<std::size_t>(row)]; ++col) out.push_back({col, row});
  return out;
}

std::vector<Cell> cells(const SkewShape& s) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (int row = 0; row < s.outer().length(); ++row)
    for (int col = s.inner()[static_cast<std::size_t>(row)]; col < s.outer()[static_cast<std::size_t>(row)]; ++col)
      out.push_back({col, row});
  return out;
}

std::vector<int> content_multiset(const Partition& p) {
  std::vector<int> out;
  for (const Cell& c : cells(p)) out.push_back(c.content());
  std::sort(out.begin(), out.end());
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts;
  const int width = p.empty() ? 0 : p.parts().front();
  for (int i = 1; i <= width; ++i) {
    int count = 0;
    for (int part : p.parts())
      if (part >= i) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

std::vector<Cell> addable_cells(const Partition& inner, const Partition& outer) {
  std::vector<Cell> out;
  for (int row = 0; row <= inner.length(); ++row) {
    const int col = inner[static_cast<std::size_t>(row)];
    const bool fits_below = row == 0 || inner[static_cast<std::size_t>(row - 1)] > col;
    if (fits_below && col < outer[static_cast<std::size_t>(row)]) out.push_back({col, row});
  }
  return out;
}

std::vector<Cell> removable_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int row = 0; row < p.length(); ++row) {
    const int len = p[static_cast<std::size_t>(row)];
    if (p[static_cast<std::size_t>(row + 1)] < len) out.push_back({len - 1, row});
  }
  return out;
}

Partition add_cell(const Partition& p, Cell c) {
  std::vector<int> parts = p.parts();
  if (c.row == p.length()) parts.push_back(0);
  if (c.row < 0 || c.row > p.length() || parts[static_cast<std::size_t>(c.row)] != c.col)
    throw std::invalid_argument("add_cell: " + to_string(c) + " is not addable to " + p.to_string());
  ++parts[static_cast<std::size_t>(c.row)];
  return Partition(std::move(parts));
}

Partition remove_cell(const Partition& p, Cell c) {
  if (c.row < 0 || c.row >= p.length() || p[static_cast<std::size_t>(c.row)] != c.col + 1 ||
      p[static_cast<std::size_t>(c.row + 1)] > c.col)
    throw std::invalid_argument("remove_cell: " + to_string(c) + " is not a corner of " + p.to_string());
  std::vector<int> parts = p.parts();
  --parts[static_cast<std::size_t>(c.row)];
  return Partition(std::move(parts));
}

std::vector<Partition> add_cell_set(const Partition& p) {
  std::vector<Partition> out;
  for (int row = 0; row <= p.length(); ++row) {
    const int col = p[static_cast<std::size_t>(row)];
    if (row == 0 || p[static_cast<std::size_t>(row - 1)] > col) out.push_back(add_cell(p, {col, row}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> remove_cell_set(const Partition& p) {
  std::vector<Partition> out;
  for (const Cell& c : removable_cells(p)) out.push_back(remove_cell(p, c));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < static_cast<std::size_t>(inner.length()); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

Partition pad_with_ones(const Partition& mu, int n) {
  if (n < mu.size()) throw std::invalid_argument("pad_with_ones: n smaller than |mu|");
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(n - mu.size()), 1);
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

}  // namespace taquin

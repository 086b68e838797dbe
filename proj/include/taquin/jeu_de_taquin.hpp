#pragma once

#include "taquin/tableau.hpp"

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace taquin {

/// A tableau with one distinguished cell whose entry is being slid.
struct MarkedTableau {
  Tableau tableau;
  Cell mark;

  bool operator==(const MarkedTableau&) const = default;
};

/// Destination of the in-coming step at c: the neighbour below (entry x) when
/// it exists and either there is no left neighbour or x >= y (entry y on the
/// left); otherwise the left neighbour. nullopt when c has no inward neighbour.
std::optional<Cell> in_step_target(const Tableau& t, Cell c);

/// Destination of the out-going step for the entry at c: of the neighbours
/// to the right and above, the one with the smaller entry.
std::optional<Cell> out_step_target(const Tableau& t, Cell c);

/// Throws std::logic_error when the mark has no inward (resp. outward) neighbour.
MarkedTableau in_step(MarkedTableau t);
MarkedTableau out_step(MarkedTableau t);

struct SlideResult {
  Tableau tableau;          // the slid entry sits at path.back()
  std::vector<Cell> path;   // start cell first, final (root) cell last
};

/// Repeats in_step on `entry` until it has no neighbour below or to the left.
/// Throws std::invalid_argument if the entry is absent.
SlideResult in_slide(const Tableau& t, int entry);

/// Moves the entry at `start` outward while some outward neighbour holds a
/// smaller entry. Inverts in_slide: out_slide(in_slide(t, e)) restores t.
SlideResult out_slide(const Tableau& t, Cell start);

struct BijectionImage {
  Tableau skew;              // shape λ/μ, entries renumbered to 1..n-k
  Tableau exit_order;        // standard tableau of shape μ: cell i was vacated by the i-th slide
  std::vector<int> removed;  // a_1..a_k

  bool operator==(const BijectionImage&) const = default;
};

/// Observer for the intermediate states of bijection_forward: index i (0-based)
/// of the removed entry, the slide it produced, and the tableau after its root
/// cell was vacated.
using SlideObserver = std::function<void(std::size_t, const SlideResult&, const Tableau&)>;

/// Slides a_1..a_k out of a standard tableau in order. Throws
/// std::invalid_argument for a non-standard input or repeated / out-of-range
/// entries.
BijectionImage bijection_forward(const Tableau& standard, std::span<const int> removed,
                                 const SlideObserver& observer = {});

/// Exact inverse of bijection_forward. Throws std::invalid_argument when the
/// shapes or the removed tuple are inconsistent.
std::pair<Tableau, std::vector<int>> bijection_backward(const BijectionImage& image);

/// Inner shape reached by sliding out `removed`; skips building the image.
Partition exit_shape(const Tableau& standard, std::span<const int> removed);

}  // namespace taquin

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mlines/betweenness.hpp"
#include "mlines/error.hpp"
#include "mlines/point_set.hpp"

namespace mlines {

/// Finite strict partial order on elements 0..size()-1, each carrying a point
/// label. Labels are kept in increasing order.
class Poset {
 public:
  /// Builds the order from a strict comparison and checks irreflexivity,
  /// antisymmetry and transitivity; any failure is InternalInconsistency.
  static Poset from_relation(std::vector<PointId> labels, const std::function<bool(PointId, PointId)>& less);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<PointId>& labels() const noexcept { return labels_; }
  bool less(std::size_t i, std::size_t j) const noexcept { return up_[i].contains(static_cast<PointId>(j)); }
  bool comparable(std::size_t i, std::size_t j) const noexcept { return less(i, j) || less(j, i); }
  /// Strict up-set of element i, as element indices.
  const PointSet& up(std::size_t i) const noexcept { return up_[i]; }

 private:
  std::vector<PointId> labels_;
  std::vector<PointSet> up_;
};

/// The order x < y iff [a x y] on the ground set V \ {a}.
struct AnchoredPoset {
  PointId anchor = 0;
  Poset order;
};

template <BetweennessSource S>
AnchoredPoset anchored_poset(const S& s, PointId a);

/// The anchored order restricted to `ground` (which must not contain a).
template <BetweennessSource S>
Poset anchored_order(const S& s, PointId a, const std::vector<PointId>& ground);

enum class TieBreak {
  LexLeast,   // lexicographically least label sets among all maximum ones
  Canonical,  // first found by the deterministic DP / matching; much cheaper
};

struct DilworthResult {
  std::vector<PointId> chain;      // labels, bottom to top
  std::vector<PointId> antichain;  // labels, increasing
};

/// A maximum chain and a maximum antichain of the poset.
DilworthResult dilworth_decompose(const Poset& p, TieBreak tie = TieBreak::LexLeast);
DilworthResult dilworth_decompose(const AnchoredPoset& p, TieBreak tie = TieBreak::LexLeast);

/// Height (longest chain) and width (largest antichain) of the sub-order on
/// the given element indices.
std::size_t poset_height(const Poset& p, const std::vector<std::size_t>& elements);
std::size_t poset_width(const Poset& p, const std::vector<std::size_t>& elements);

}  // namespace mlines

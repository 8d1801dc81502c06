#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mlines/error.hpp"
#include "mlines/metric_space.hpp"

namespace mlines {

/// Anything that answers [abc] queries over points [0, size()): metric spaces
/// and pseudometric betweenness relations both qualify.
template <class S>
concept BetweennessSource = requires(const S& s, PointId p) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s.between(p, p, p) } -> std::same_as<bool>;
};

using Triple = std::array<PointId, 3>;

inline constexpr std::size_t kMaxRelationPoints = 1024;

/// Ternary relation closed under reversal. Each reversal orbit {(a,b,c), (c,b,a)}
/// is stored once, keyed by its unordered endpoint pair, so M1 holds by
/// construction. Only validate_axioms, induced_betweenness and the enumerator
/// produce instances, so a live object always satisfies M0-M3.
class BetweennessRelation {
 public:
  std::size_t size() const noexcept { return n_; }

  bool between(PointId a, PointId b, PointId c) const noexcept {
    if (a == c || a == b || b == c) return false;
    const std::size_t bit = pair_index(a, c) * n_ + b;
    return (bits_[bit >> 6] >> (bit & 63)) & 1U;
  }

  /// Canonical orbit representatives (a < c), sorted lexicographically.
  std::vector<Triple> triples() const;
  std::size_t orbit_count() const noexcept { return orbits_; }

  friend bool operator==(const BetweennessRelation& x, const BetweennessRelation& y) noexcept {
    return x.n_ == y.n_ && x.bits_ == y.bits_;
  }

 private:
  friend class RelationBuilder;

  std::size_t pair_index(PointId a, PointId c) const noexcept {
    if (a > c) std::swap(a, c);
    // row-major index of (a, c), a < c, in the strict upper triangle
    return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (c - a - 1);
  }

  std::size_t n_ = 0;
  std::size_t orbits_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Stores triples without checking the axioms. Used by validate_axioms, the
/// enumerator and induced_betweenness; not part of the public contract.
class RelationBuilder {
 public:
  explicit RelationBuilder(std::size_t n);
  void add(PointId a, PointId b, PointId c);
  void remove(PointId a, PointId b, PointId c);
  const BetweennessRelation& view() const noexcept { return rel_; }
  BetweennessRelation finish() && { return std::move(rel_); }

 private:
  BetweennessRelation rel_;
};

/// Builds a relation from raw triples (each implies its reversal) and checks
/// M0, M2, M3 in that order, throwing on the first violation:
/// M0Violation(a,b,c); M2Violation(a,b,c) when [abc] and [bac];
/// M3Violation(a,b,c,d) when [abc] and [acd] but not both [abd] and [bcd].
BetweennessRelation validate_axioms(const std::vector<Triple>& raw, std::size_t n);

/// All [abc] facts of a metric space.
BetweennessRelation induced_betweenness(const MetricSpace& m);

struct FactCheck {
  bool holds = true;
  char part = 0;                        // 'a', 'b' or 'c' when a counterexample exists
  std::vector<PointId> counterexample;  // the offending points or sequence
};

/// Cross-checks (a) [abc]&[acd] => [abcd], (b) [abd]&[bcd] => [abcd], and
/// (c) every deletion from a geodesic sequence is geodesic, for all geodesic
/// sequences up to `max_sequence_length` points.
FactCheck fact_consequences(const BetweennessRelation& b, std::size_t max_sequence_length = 5);

/// True iff [p_r p_s p_t] for all r < s < t. Sequences shorter than three
/// points are vacuously geodesic.
template <BetweennessSource S>
bool is_geodesic_sequence(const S& s, const std::vector<PointId>& seq);

/// A geodesic ordering of `points`, or nothing. Endpoint pairs are tried in
/// lexicographic order, so the smallest admissible endpoint leads.
template <BetweennessSource S>
std::optional<std::vector<PointId>> is_geodesic_set(const S& s, const std::vector<PointId>& points);

/// A maximum-length geodesic sequence; "length" counts points. Falls back to
/// the pair (0, 1) when no collinear triple exists.
template <BetweennessSource S>
std::vector<PointId> longest_geodesic(const S& s);

/// Streams every pseudometric betweenness on n labelled points (2 <= n <= 5),
/// each exactly once.
void for_each_pseudometric_betweenness(std::size_t n,
                                       const std::function<void(const BetweennessRelation&)>& emit);

std::vector<BetweennessRelation> enumerate_pseudometric_betweennesses(std::size_t n);

}  // namespace mlines

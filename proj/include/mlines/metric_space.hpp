#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlines/error.hpp"
#include "mlines/point_set.hpp"

namespace mlines {

inline constexpr std::size_t kDefaultMaxPoints = 4096;

using DistMatrix = std::vector<std::vector<Dist>>;

/// A finite metric space with exact integer distances. Distances are stored
/// pre-scaled: the true distance between i and j is dist(i, j) / scale().
/// Immutable after construction; only validate_metric and subspace build one.
class MetricSpace {
 public:
  std::size_t size() const noexcept { return n_; }
  Dist scale() const noexcept { return scale_; }
  Dist dist(PointId i, PointId j) const noexcept { return dist_[i * n_ + j]; }

  /// [abc]: a, b, c distinct and d(a,c) = d(a,b) + d(b,c).
  bool between(PointId a, PointId b, PointId c) const noexcept {
    return a != b && b != c && a != c && dist(a, c) == dist(a, b) + dist(b, c);
  }

  /// Maps an index of this space to the index in the space it was cut from
  /// (identity for spaces built by validate_metric).
  PointId parent_index(PointId i) const noexcept { return parent_[i]; }
  const std::vector<PointId>& parent_indices() const noexcept { return parent_; }

  DistMatrix matrix() const;

  friend bool operator==(const MetricSpace& a, const MetricSpace& b) noexcept {
    return a.n_ == b.n_ && a.scale_ == b.scale_ && a.dist_ == b.dist_;
  }

 private:
  friend MetricSpace validate_metric(const DistMatrix&, Dist, std::size_t);
  friend MetricSpace subspace(const MetricSpace&, const std::vector<PointId>&);

  std::size_t n_ = 0;
  Dist scale_ = 1;
  std::vector<Dist> dist_;
  std::vector<PointId> parent_;
};

/// Checks the metric axioms in the order diagonal, symmetry, positivity,
/// triangle inequality and throws on the first violation found in row-major
/// scan order. TriangleViolation(i, j, k) reports d(i,k) > d(i,j) + d(j,k).
MetricSpace validate_metric(const DistMatrix& matrix, Dist scale = 1,
                            std::size_t max_points = kDefaultMaxPoints);

/// Rational ingestion: entries are (numerator, denominator) pairs, scaled by
/// their least common denominator, which becomes the space's scale.
MetricSpace metric_from_rationals(const std::vector<std::vector<std::pair<Dist, Dist>>>& entries,
                                  std::size_t max_points = kDefaultMaxPoints);

bool between(const MetricSpace& m, PointId a, PointId b, PointId c);
bool collinear(const MetricSpace& m, PointId a, PointId b, PointId c);

struct Diameter {
  Dist value = 0;
  std::pair<PointId, PointId> pair;  // least-index pair attaining the value
};
Diameter diameter(const MetricSpace& m);

/// Sorted, duplicate-free set of all distances, 0 included.
std::vector<Dist> distance_set(const MetricSpace& m);

/// Restriction to `points` (re-indexed in the given order). parent_index maps
/// each new index back to the index in `m`.
MetricSpace subspace(const MetricSpace& m, const std::vector<PointId>& points);

/// Points at (scaled) distance exactly `d` from z.
std::vector<PointId> sphere(const MetricSpace& m, PointId z, Dist d);

/// True when the space is the shortest-path metric of the graph whose edges
/// are the pairs at distance scale().
bool is_graph_metric(const MetricSpace& m);

}  // namespace mlines

#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mlines/betweenness.hpp"
#include "mlines/graph.hpp"
#include "mlines/metric_space.hpp"
#include "mlines/point_set.hpp"

namespace mlines {

struct Line {
  PointSet members;
  Edge generator;  // the pair the line was computed from, smaller index first
};

struct LineEntry {
  PointSet members;
  std::vector<Edge> generators;  // E(L), sorted
};

/// All distinct lines of a space with their generator sets, sorted by member
/// list. The generator sets partition the pairs of points.
class LineSet {
 public:
  LineSet() = default;
  LineSet(std::size_t universe, std::vector<LineEntry> entries);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<LineEntry>& entries() const noexcept { return entries_; }
  const LineEntry& operator[](std::size_t i) const noexcept { return entries_[i]; }

  std::optional<std::size_t> find(const PointSet& members) const;
  bool contains(const PointSet& members) const { return find(members).has_value(); }
  /// The entry for `members`; throws UnknownLine.
  const LineEntry& at(const PointSet& members) const;

 private:
  std::size_t universe_ = 0;
  std::vector<LineEntry> entries_;
  std::unordered_map<PointSet, std::size_t, PointSetHash> index_;
};

/// {a, b} together with every c collinear with a and b. Throws SamePoint.
template <BetweennessSource S>
Line line(const S& s, PointId a, PointId b);

/// Throws TooFewPoints when n < 2. Rows of the pair loop may run on `jobs`
/// threads; the result does not depend on it.
template <BetweennessSource S>
LineSet all_lines(const S& s, std::size_t jobs = 1);

/// The universal line with the least generating pair in row-major order.
template <BetweennessSource S>
std::optional<Line> universal_line(const S& s);

struct GeneratorGraph {
  PointSet line;
  std::optional<Dist> delta;
  Graph graph;
};

/// H(L), or H_delta(L) when delta is given. Throws UnknownLine when `line` is
/// not in `lines`, and NoDistances for a delta on a betweenness relation.
GeneratorGraph generator_graph(const MetricSpace& m, const LineSet& lines, const PointSet& line,
                               std::optional<Dist> delta = std::nullopt);
GeneratorGraph generator_graph(const BetweennessRelation& b, const LineSet& lines, const PointSet& line,
                               std::optional<Dist> delta = std::nullopt);

GeneratorGraph prune_to_min_degree(const GeneratorGraph& g, std::size_t k);

/// Outcome of evaluating a proven statement on concrete data. A false result
/// carries the points that break it.
struct LemmaCheck {
  bool holds = true;
  std::vector<PointId> counterexample;
};

/// Whether H_delta(L) has maximum degree at most 1. Requires 2*delta > D,
/// otherwise PreconditionUnmet.
LemmaCheck check_no_high_degree(const MetricSpace& m, const LineSet& lines, const PointSet& line, Dist delta);

}  // namespace mlines

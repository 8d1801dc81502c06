#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlines/betweenness.hpp"
#include "mlines/exact.hpp"
#include "mlines/lines.hpp"

namespace mlines {

/// Certified set of pairwise distinct lines produced by one construction.
/// branch_trace lists every attempted branch as "tag: count" followed by
/// "selected: tag". verified_distinct is recomputed from the member sets.
struct WitnessReport {
  std::string construction;
  std::vector<std::string> branch_trace;
  std::vector<Line> lines;
  std::size_t guaranteed_count = 0;
  bool verified_distinct = false;
  std::optional<Rational> formula_value;
};

struct WitnessOptions {
  /// Replaces the n^0.9 threshold of the metric construction; default
  /// ceil(n^(9/10)).
  std::optional<std::uint64_t> threshold;
  /// Test hook for witness_bounded_distances: pretend the space has this many
  /// lines so the construction branch runs.
  std::optional<std::size_t> assumed_line_count;
  std::size_t jobs = 1;
};

/// Pairwise distinct member sets.
bool lines_distinct(const std::vector<Line>& lines);

/// For a geodesic p_1..p_k: the lines p_i q_i (q_i the least point off the
/// line p_i p_{i+1}) and p_1 p_k. Exactly k lines. Throws UniversalLinePresent
/// when some q_i does not exist, PreconditionUnmet when `geo` is not geodesic.
template <BetweennessSource S>
WitnessReport witness_from_geodesic(const S& s, const std::vector<PointId>& geo);

/// Anchored-order construction for pseudometric betweennesses, over every
/// anchor. Throws UniversalLinePresent.
template <BetweennessSource S>
WitnessReport witness_pseudometric(const S& s, const WitnessOptions& opt = {});

/// Diameter-pair construction with the far sets X_a, X_b and the midpoint set
/// Y. Throws UniversalLinePresent.
WitnessReport witness_metric(const MetricSpace& m, const WitnessOptions& opt = {});

/// Returns every line when the space already has at least n/(5w) of them;
/// otherwise replays the far-sphere, half-distance and 3-core constructions.
WitnessReport witness_bounded_distances(const MetricSpace& m, const WitnessOptions& opt = {});

/// Distances (in units of the scale) must be integers in {1, 2, 3}; throws
/// NotA3Metric otherwise.
WitnessReport witness_3metric(const MetricSpace& m, const WitnessOptions& opt = {});

/// Pairs generating one line at a common distance >= 2, pairwise
/// alpha-related, in a graph metric. Throws PreconditionUnmet.
WitnessReport witness_graph_alpha(const MetricSpace& m, const std::vector<Edge>& pairs);

/// Pairs generating one line, pairwise gamma-related, in a graph metric.
/// Throws NotGammaFamily.
WitnessReport witness_graph_gamma(const MetricSpace& m, const std::vector<Edge>& pairs);

/// Dispatcher over the most common distance d: neighbourhood subspace for
/// d = 1, otherwise many lines or one rich generator graph split into gamma
/// and alpha families. Also tries the longest geodesic. Throws
/// UniversalLinePresent, PreconditionUnmet for non-graph metrics.
WitnessReport witness_graph(const MetricSpace& m, const WitnessOptions& opt = {});

/// Least integers meeting the asymptotic bounds with the o(1) term dropped.
std::uint64_t pseudometric_bound(std::uint64_t n);               // 2 k^5 >= n^2
std::uint64_t metric_bound(std::uint64_t n);                     // 2 k^2 >= n
std::uint64_t diameter_graph_bound(std::uint64_t n, std::uint64_t d);  // 128 k^3 d^4 >= n^4
std::uint64_t graph_bound(std::uint64_t n);                      // (2k)^7 >= n^4
Rational bounded_distances_bound(std::uint64_t n, std::uint64_t w);  // n / (5w)

}  // namespace mlines

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mlines/graph.hpp"
#include "mlines/metric_space.hpp"

namespace mlines {

/// Decodes one graph6 record (an optional ">>graph6<<" header is accepted).
/// Throws MalformedGraph6 with the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// One "u v" pair per line, 0-indexed; '#' starts a comment. The vertex count
/// is one more than the largest index unless `n` is given.
Graph parse_edge_list(std::string_view text, std::size_t n = 0);
std::string to_edge_list(const Graph& g);

/// Shortest-path metric by BFS from every vertex (scale 1). Throws
/// Disconnected(0, v) for the least vertex v unreachable from 0.
MetricSpace graph_metric(const Graph& g);

/// Complete k-partite graph, k = floor(n^(2/3)), parts as even as possible
/// with the larger parts first. Throws NTooSmall when n < 4.
Graph gen_complete_kpartite(std::size_t n);
std::vector<std::size_t> kpartite_part_sizes(std::size_t n);

/// Path v_0..v_{s^3} plus, for each 0 <= j < s^2, a detour of `detour_length`
/// edges between v_{js} and v_{js+s}. Path vertices come first, then the
/// detour interiors by increasing j. detour_length 0 means s + 1.
Graph gen_subdivided_path(std::size_t s, std::size_t detour_length = 0);
std::size_t subdivided_path_vertex_count(std::size_t s, std::size_t detour_length = 0);

Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);

/// Given a walk from a to b with d(a,b) >= 2, returns an interior vertex of
/// the walk that lies outside O(a, b). The search runs along a shortest a-b
/// path inside the walk's vertex set, which is an induced path of G.
PointId walk_intermediate_point(const Graph& g, const MetricSpace& m, const std::vector<PointId>& walk);

/// Every connected graph on n vertices up to isomorphism, each in its
/// canonical labelling, ordered by canonical code. Supports n <= 10.
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

/// Canonical code of a graph with at most 11 vertices: the least upper
/// triangle bit string over all relabellings consistent with colour
/// refinement. Equal codes iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

}  // namespace mlines

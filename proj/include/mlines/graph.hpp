#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mlines/error.hpp"

namespace mlines {

using Edge = std::pair<PointId, PointId>;

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Throws SelfLoop, DuplicateEdge or PointOutOfRange.
  void add_edge(PointId u, PointId v);
  void remove_vertex_edges(PointId v);
  bool has_edge(PointId u, PointId v) const;

  const std::vector<PointId>& neighbors(PointId v) const noexcept { return adj_[v]; }
  std::size_t degree(PointId v) const noexcept { return adj_[v].size(); }
  std::size_t max_degree() const noexcept;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<PointId>> adj_;
  std::size_t edges_ = 0;
};

/// The k-core: iteratively deletes vertices of degree < k. Vertices keep their
/// indices; deleted ones become isolated.
Graph prune_to_min_degree(const Graph& g, std::size_t k);

/// Connected components with at least one edge, each sorted, ordered by their
/// least vertex.
std::vector<std::vector<PointId>> edge_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace mlines

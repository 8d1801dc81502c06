#include "mlines/graph.hpp"

#include <algorithm>
#include <string>

namespace mlines {

void Graph::add_edge(PointId u, PointId v) {
  if (u >= size() || v >= size()) {
    throw Error(ErrorCode::PointOutOfRange, "edge endpoint out of range", {u, v});
  }
  if (u == v) throw Error(ErrorCode::SelfLoop, "self loop at " + std::to_string(u), {u});
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) {
    throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + std::to_string(u) + " " + std::to_string(v), {u, v});
  }
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edges_;
}

void Graph::remove_vertex_edges(PointId v) {
  for (PointId u : adj_[v]) {
    auto& au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
  }
  edges_ -= adj_[v].size();
  adj_[v].clear();
}

bool Graph::has_edge(PointId u, PointId v) const {
  if (u >= size() || v >= size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (PointId u = 0; u < size(); ++u) {
    for (PointId v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph prune_to_min_degree(const Graph& g, std::size_t k) {
  Graph h = g;
  std::vector<PointId> queue;
  std::vector<char> removed(g.size(), 0);
  for (PointId v = 0; v < g.size(); ++v) {
    if (h.degree(v) < k) {
      queue.push_back(v);
      removed[v] = 1;
    }
  }
  while (!queue.empty()) {
    const PointId v = queue.back();
    queue.pop_back();
    const std::vector<PointId> nbrs = h.neighbors(v);
    h.remove_vertex_edges(v);
    for (PointId u : nbrs) {
      if (!removed[u] && h.degree(u) < k) {
        removed[u] = 1;
        queue.push_back(u);
      }
    }
  }
  return h;
}

std::vector<std::vector<PointId>> edge_components(const Graph& g) {
  std::vector<std::vector<PointId>> out;
  std::vector<char> seen(g.size(), 0);
  for (PointId s = 0; s < g.size(); ++s) {
    if (seen[s] || g.degree(s) == 0) continue;
    std::vector<PointId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (PointId u : g.neighbors(comp[i])) {
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.size() <= 1) return true;
  std::vector<char> seen(g.size(), 0);
  std::vector<PointId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const PointId v = stack.back();
    stack.pop_back();
    for (PointId u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == g.size();
}

}  // namespace mlines

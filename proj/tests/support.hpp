#pragma once

#include <gtest/gtest.h>

#include "mlines/graph_metrics.hpp"
#include "oracles.hpp"

#define EXPECT_MLINES_ERROR(stmt, expected)                                         \
  do {                                                                             \
    try {                                                                          \
      stmt;                                                                        \
      ADD_FAILURE() << "expected " #expected;                                      \
    } catch (const mlines::Error& e) {                                             \
      EXPECT_EQ(e.code(), mlines::ErrorCode::expected) << e.what();               \
    }                                                                              \
  } while (0)

namespace support {

inline mlines::Graph make_graph(std::size_t n, const oracle::EdgeList& edges) {
  mlines::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(static_cast<mlines::PointId>(u), static_cast<mlines::PointId>(v));
  return g;
}

inline oracle::EdgeList edges_of(const mlines::Graph& g) {
  oracle::EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return out;
}

inline oracle::Matrix matrix_of(const mlines::MetricSpace& m) {
  oracle::Matrix d(m.size(), std::vector<long long>(m.size()));
  for (mlines::PointId i = 0; i < m.size(); ++i)
    for (mlines::PointId j = 0; j < m.size(); ++j) d[i][j] = m.dist(i, j);
  return d;
}

inline mlines::MetricSpace metric_of(const mlines::Graph& g) { return mlines::graph_metric(g); }

inline mlines::MetricSpace cycle(std::size_t n) { return mlines::graph_metric(mlines::gen_cycle(n)); }
inline mlines::MetricSpace path(std::size_t n) { return mlines::graph_metric(mlines::gen_path(n)); }
inline mlines::MetricSpace complete(std::size_t n) { return mlines::graph_metric(mlines::gen_complete(n)); }

inline std::vector<mlines::PointId> points(std::initializer_list<mlines::PointId> p) { return p; }

/// All connected graphs on 2..max_n vertices, smallest first.
inline std::vector<mlines::Graph> connected_upto(std::size_t max_n) {
  std::vector<mlines::Graph> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto level = mlines::enumerate_connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace support

#include <random>

#include "mlines/lines.hpp"
#include "mlines/verifier.hpp"
#include "support.hpp"

using namespace mlines;
using support::complete;
using support::cycle;
using support::path;
using support::points;

namespace {

std::vector<PointId> members(const Line& l) { return l.members.members(); }

PointSet set_of(std::size_t n, std::initializer_list<PointId> p) { return PointSet::of(n, p); }

void expect_matches_oracle(const MetricSpace& m, std::size_t jobs = 1) {
  const auto expected = oracle::lines(support::matrix_of(m));
  const LineSet got = all_lines(m, jobs);
  ASSERT_EQ(got.size(), expected.size());
  for (const auto& [pts, gens] : expected) {
    std::vector<PointId> ids(pts.begin(), pts.end());
    const LineEntry& e = got.at(PointSet::of(m.size(), ids));
    std::vector<Edge> want;
    for (auto [a, b] : gens) want.emplace_back(a, b);
    ASSERT_EQ(e.generators, want);
  }
}

}  // namespace

TEST(Line, Examples) {
  EXPECT_EQ(members(line(cycle(5), 0, 1)), points({0, 1, 2, 4}));
  EXPECT_EQ(members(line(path(4), 1, 2)), points({0, 1, 2, 3}));
  for (PointId a = 0; a < 4; ++a)
    for (PointId b = 0; b < 4; ++b)
      if (a != b) EXPECT_EQ(members(line(complete(4), a, b)), (std::vector<PointId>{std::min(a, b), std::max(a, b)}));
  EXPECT_MLINES_ERROR(line(cycle(5), 2, 2), SamePoint);
  EXPECT_MLINES_ERROR(line(cycle(5), 2, 5), PointOutOfRange);
}

TEST(Line, SameOnMetricAndInducedRelation) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 100; ++round) {
    const MetricSpace m = random_metric(rng, 2 + round % 9, 4);
    const BetweennessRelation b = induced_betweenness(m);
    for (PointId x = 0; x < m.size(); ++x)
      for (PointId y = x + 1; y < m.size(); ++y) ASSERT_EQ(line(m, x, y).members, line(b, x, y).members);
  }
}

TEST(AllLines, KnownCounts) {
  const LineSet c5 = all_lines(cycle(5));
  EXPECT_EQ(c5.size(), 10u);
  std::size_t four = 0, three = 0;
  for (const auto& e : c5.entries()) (e.members.count() == 4 ? four : three)++;
  EXPECT_EQ(four, 5u);
  EXPECT_EQ(three, 5u);

  const LineSet c4 = all_lines(cycle(4));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(c4[0].members.count(), 4u);
  EXPECT_EQ(c4[0].generators.size(), 6u);

  for (std::size_t n = 2; n <= 9; ++n) {
    const LineSet k = all_lines(complete(n));
    EXPECT_EQ(k.size(), n * (n - 1) / 2);
    for (const auto& e : k.entries()) EXPECT_EQ(e.members.count(), 2u);
  }
  EXPECT_MLINES_ERROR(all_lines(validate_metric({{0}})), TooFewPoints);
}

TEST(AllLines, MatchesOracleOnRandomMetricsAndGraphs) {
  std::mt19937_64 rng(43);
  std::mt19937 grng(43);
  for (int round = 0; round < 200; ++round) {
    expect_matches_oracle(random_metric(rng, 2 + round % 10, 1 + round % 6));
    const int n = 2 + round % 9;
    expect_matches_oracle(graph_metric(support::make_graph(n, oracle::random_connected(grng, n, 0.3))));
  }
}

TEST(AllLines, GeneratorsPartitionAllPairs) {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 100; ++round) {
    const MetricSpace m = random_metric(rng, 2 + round % 12, 5);
    const LineSet lines = all_lines(m);
    std::size_t pairs = 0;
    for (const auto& e : lines.entries()) {
      pairs += e.generators.size();
      for (auto [a, b] : e.generators) ASSERT_EQ(line(m, a, b).members, e.members);
    }
    ASSERT_EQ(pairs, m.size() * (m.size() - 1) / 2);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) ASSERT_TRUE(lines[i].members < lines[i + 1].members);
  }
}

TEST(AllLines, IndependentOfThreadCount) {
  const MetricSpace m = graph_metric(gen_subdivided_path(3));
  const LineSet one = all_lines(m, 1);
  for (std::size_t jobs : {2, 3, 8}) {
    const LineSet many = all_lines(m, jobs);
    ASSERT_EQ(many.size(), one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(many[i].members, one[i].members);
      EXPECT_EQ(many[i].generators, one[i].generators);
    }
  }
}

TEST(AllLines, WorksOnRelations) {
  const LineSet c5 = all_lines(induced_betweenness(cycle(5)));
  EXPECT_EQ(c5.size(), 10u);
  const LineSet empty = all_lines(validate_axioms({}, 4));
  EXPECT_EQ(empty.size(), 6u);
}

TEST(LineSet, LookupAndUnknown) {
  const LineSet c5 = all_lines(cycle(5));
  EXPECT_TRUE(c5.contains(set_of(5, {0, 1, 2})));
  EXPECT_FALSE(c5.contains(set_of(5, {0, 1})));
  EXPECT_MLINES_ERROR(c5.at(set_of(5, {0, 1})), UnknownLine);
}

TEST(UniversalLine, Examples) {
  for (std::size_t n : {2, 3, 4, 7}) {
    const auto u = universal_line(path(n));
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(u->members.count(), n);
  }
  EXPECT_FALSE(universal_line(cycle(5)).has_value());
  const auto two = universal_line(validate_metric({{0, 3}, {3, 0}}));
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->generator, (Edge{0, 1}));
}

TEST(UniversalLine, MatchesOracle) {
  std::mt19937 rng(53);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + round % 8;
    const MetricSpace m = graph_metric(support::make_graph(n, oracle::random_connected(rng, n, 0.4)));
    ASSERT_EQ(universal_line(m).has_value(), oracle::has_universal(support::matrix_of(m)));
  }
}

TEST(GeneratorGraph, Examples) {
  const MetricSpace c4 = cycle(4);
  const LineSet lines = all_lines(c4);
  const PointSet full = PointSet::full(4);
  const GeneratorGraph h2 = generator_graph(c4, lines, full, 2);
  EXPECT_EQ(h2.graph.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(h2.graph.max_degree(), 1u);
  EXPECT_EQ(generator_graph(c4, lines, full).graph.edge_count(), 6u);

  const MetricSpace k4 = complete(4);
  const GeneratorGraph k = generator_graph(k4, all_lines(k4), set_of(4, {0, 1}), 1);
  EXPECT_EQ(k.graph.edges(), (std::vector<Edge>{{0, 1}}));

  EXPECT_MLINES_ERROR(generator_graph(c4, lines, set_of(4, {0, 1}), 1), UnknownLine);
  const BetweennessRelation b = induced_betweenness(c4);
  EXPECT_MLINES_ERROR(generator_graph(b, all_lines(b), full, 1), NoDistances);
  EXPECT_EQ(generator_graph(b, all_lines(b), full).graph.edge_count(), 6u);
}

TEST(NoHighDegree, Examples) {
  const MetricSpace c4 = cycle(4);
  EXPECT_TRUE(check_no_high_degree(c4, all_lines(c4), PointSet::full(4), 2).holds);
  const MetricSpace c5 = cycle(5);
  const LineSet lines = all_lines(c5);
  for (const auto& e : lines.entries())
    if (e.members.count() == 3) EXPECT_TRUE(check_no_high_degree(c5, lines, e.members, 2).holds);
  EXPECT_MLINES_ERROR(check_no_high_degree(c4, all_lines(c4), PointSet::full(4), 1), PreconditionUnmet);
}

TEST(NoHighDegree, HoldsOnRandomSpaces) {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 300; ++round) {
    const MetricSpace m = random_metric(rng, 3 + round % 8, 1 + round % 6);
    const LineSet lines = all_lines(m);
    const Dist d = diameter(m).value;
    for (const auto& e : lines.entries())
      for (Dist delta : distance_set(m))
        if (2 * delta > d) ASSERT_TRUE(check_no_high_degree(m, lines, e.members, delta).holds);
  }
}

TEST(Prune, Examples) {
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  EXPECT_EQ(prune_to_min_degree(triangle, 2), triangle);

  Graph star(5);
  for (PointId v = 1; v < 5; ++v) star.add_edge(0, v);
  EXPECT_EQ(prune_to_min_degree(star, 2).edge_count(), 0u);

  Graph pendant = gen_cycle(4);
  Graph withp(5);
  for (auto [u, v] : pendant.edges()) withp.add_edge(u, v);
  withp.add_edge(3, 4);
  Graph core(5);
  for (auto [u, v] : pendant.edges()) core.add_edge(u, v);
  EXPECT_EQ(prune_to_min_degree(withp, 2), core);
}

TEST(Prune, ResultIsMaximalCore) {
  std::mt19937 rng(61);
  for (int round = 0; round < 200; ++round) {
    const int n = 3 + round % 10;
    const Graph g = support::make_graph(n, oracle::random_connected(rng, n, 0.2));
    const std::size_t k = 1 + round % 3;
    const Graph core = prune_to_min_degree(g, k);
    for (PointId v = 0; v < core.size(); ++v) ASSERT_TRUE(core.degree(v) == 0 || core.degree(v) >= k);
    for (auto [u, v] : core.edges()) ASSERT_TRUE(g.has_edge(u, v));
    // maximal: no removed vertex has k neighbours among the core plus itself
    for (PointId v = 0; v < g.size(); ++v) {
      if (core.degree(v) > 0) continue;
      std::size_t inside = 0;
      for (PointId u : g.neighbors(v)) inside += core.degree(u) > 0;
      ASSERT_LT(inside, k);
    }
  }
}

TEST(EdgeComponents, OrderedByLeastVertex) {
  Graph g(7);
  g.add_edge(5, 6);
  g.add_edge(1, 2);
  g.add_edge(2, 4);
  EXPECT_EQ(edge_components(g), (std::vector<std::vector<PointId>>{{1, 2, 4}, {5, 6}}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(gen_cycle(5)));
}

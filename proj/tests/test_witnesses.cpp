#include <map>
#include <random>
#include <set>

#include "mlines/relations.hpp"
#include "mlines/verifier.hpp"
#include "mlines/witnesses.hpp"
#include "support.hpp"

using namespace mlines;
using support::complete;
using support::cycle;
using support::path;
using support::points;

namespace {

// Lines of the report, checked against the brute-force line oracle.
void expect_sound(const MetricSpace& m, const WitnessReport& r) {
  ASSERT_TRUE(r.verified_distinct);
  ASSERT_LE(r.guaranteed_count, r.lines.size());
  const auto d = support::matrix_of(m);
  const auto truth = oracle::lines(d);
  std::set<oracle::Line> seen;
  for (const Line& l : r.lines) {
    const auto pts = l.members.members();
    const oracle::Line as_oracle(pts.begin(), pts.end());
    ASSERT_TRUE(truth.count(as_oracle)) << "not a line of the space";
    ASSERT_TRUE(seen.insert(as_oracle).second) << "repeated line";
    ASSERT_EQ(oracle::line(d, static_cast<int>(l.generator.first), static_cast<int>(l.generator.second)), as_oracle);
  }
  ASSERT_LE(r.lines.size(), truth.size());
  ASSERT_FALSE(r.branch_trace.empty());
  ASSERT_EQ(r.branch_trace.back().rfind("selected: ", 0), 0u);
}

bool selected(const WitnessReport& r, const std::string& fragment) {
  return r.branch_trace.back().find(fragment) != std::string::npos;
}

MetricSpace k222() {
  Graph g(6);
  for (PointId u = 0; u < 6; ++u)
    for (PointId v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) g.add_edge(u, v);
  return graph_metric(g);
}

// Largest family of pairs on one line, all at one distance >= 2, that are
// pairwise alpha-related (greedy in generator order).
std::vector<Edge> alpha_family(const MetricSpace& m) {
  const LineSet lines = all_lines(m);
  std::vector<Edge> best;
  for (const auto& e : lines.entries()) {
    std::map<Dist, std::vector<Edge>> by_distance;
    for (const Edge& g : e.generators) by_distance[m.dist(g.first, g.second)].push_back(g);
    for (const auto& [d, pairs] : by_distance) {
      if (d < 2) continue;
      std::vector<Edge> family;
      for (const Edge& p : pairs) {
        if (std::all_of(family.begin(), family.end(), [&](const Edge& q) { return alpha_related(m, p, q); }))
          family.push_back(p);
      }
      if (family.size() > best.size()) best = family;
    }
  }
  return best;
}

}  // namespace

TEST(GeodesicWitness, Examples) {
  const WitnessReport c5 = witness_from_geodesic(cycle(5), points({0, 1, 2}));
  EXPECT_EQ(c5.lines.size(), 3u);
  EXPECT_EQ(c5.guaranteed_count, 3u);
  EXPECT_EQ(c5.formula_value, Rational(3));
  expect_sound(cycle(5), c5);
  EXPECT_EQ(c5.lines.back().members, line(cycle(5), 0, 2).members);

  const WitnessReport c7 = witness_from_geodesic(cycle(7), points({0, 1, 2, 3}));
  EXPECT_EQ(c7.lines.size(), 4u);
  expect_sound(cycle(7), c7);
  EXPECT_MLINES_ERROR(witness_from_geodesic(cycle(6), points({0, 1, 2, 3})), UniversalLinePresent);

  EXPECT_MLINES_ERROR(witness_from_geodesic(path(4), points({0, 1, 2, 3})), UniversalLinePresent);
  EXPECT_MLINES_ERROR(witness_from_geodesic(cycle(5), points({0, 1, 3})), PreconditionUnmet);
  EXPECT_MLINES_ERROR(witness_from_geodesic(cycle(5), points({0})), PreconditionUnmet);
  EXPECT_MLINES_ERROR(witness_from_geodesic(cycle(5), points({0, 1, 0})), DuplicateInSequence);
}

TEST(GeodesicWitness, ExactlyKLinesOnRandomGraphs) {
  std::mt19937 rng(103);
  int checked = 0;
  for (int round = 0; round < 600 && checked < 150; ++round) {
    const int n = 4 + round % 9;
    const MetricSpace m = graph_metric(support::make_graph(n, oracle::random_connected(rng, n, 0.2)));
    if (oracle::has_universal(support::matrix_of(m))) continue;
    ++checked;
    const auto geo = longest_geodesic(m);
    const WitnessReport r = witness_from_geodesic(m, geo);
    ASSERT_EQ(r.lines.size(), geo.size());
    ASSERT_EQ(r.guaranteed_count, geo.size());
    expect_sound(m, r);
    // every prefix of a geodesic is a geodesic too
    for (std::size_t k = 2; k < geo.size(); ++k) {
      const std::vector<PointId> prefix(geo.begin(), geo.begin() + static_cast<std::ptrdiff_t>(k));
      ASSERT_EQ(witness_from_geodesic(m, prefix).lines.size(), k);
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(GeodesicWitness, WorksOnRelations) {
  const BetweennessRelation b = induced_betweenness(cycle(7));
  const WitnessReport r = witness_from_geodesic(b, points({0, 1, 2, 3}));
  EXPECT_EQ(r.lines.size(), 4u);
  EXPECT_TRUE(r.verified_distinct);
}

TEST(PseudometricWitness, CycleFive) {
  const WitnessReport r = witness_pseudometric(induced_betweenness(cycle(5)));
  EXPECT_TRUE(r.verified_distinct);
  EXPECT_GE(r.guaranteed_count, 2u);
  expect_sound(cycle(5), r);
  EXPECT_EQ(r.formula_value, Rational(static_cast<std::int64_t>(pseudometric_bound(5))));
}

TEST(PseudometricWitness, CompleteGraphsUseAntichain) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const WitnessReport r = witness_pseudometric(induced_betweenness(complete(n)));
    EXPECT_TRUE(selected(r, "antichain")) << r.branch_trace.back();
    EXPECT_EQ(r.guaranteed_count, (n - 1) * (n - 2) / 2);
    expect_sound(complete(n), r);
  }
}

TEST(PseudometricWitness, OddCyclesUseChain) {
  for (std::size_t n : {7, 9, 11}) {
    const WitnessReport r = witness_pseudometric(cycle(n));
    EXPECT_TRUE(selected(r, "chain")) << r.branch_trace.back();
    expect_sound(cycle(n), r);
  }
}

TEST(PseudometricWitness, TraceListsEveryAnchor) {
  const WitnessReport r = witness_pseudometric(cycle(5));
  for (PointId a = 0; a < 5; ++a) {
    const std::string prefix = "anchor " + std::to_string(a) + " chain: ";
    EXPECT_TRUE(std::any_of(r.branch_trace.begin(), r.branch_trace.end(),
                            [&](const std::string& t) { return t.rfind(prefix, 0) == 0; }));
  }
  EXPECT_MLINES_ERROR(witness_pseudometric(path(5)), UniversalLinePresent);
}

TEST(PseudometricWitness, AllRelationsWithoutUniversalLine) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for_each_pseudometric_betweenness(n, [&](const BetweennessRelation& b) {
      if (universal_line(b)) return;
      const WitnessReport r = witness_pseudometric(b);
      ASSERT_TRUE(r.verified_distinct);
      ASSERT_LE(r.guaranteed_count, r.lines.size());
      const LineSet lines = all_lines(b);
      for (const Line& l : r.lines) ASSERT_TRUE(lines.contains(l.members));
    });
  }
}

TEST(MetricWitness, Examples) {
  const WitnessReport c5 = witness_metric(cycle(5));
  expect_sound(cycle(5), c5);
  EXPECT_LE(c5.lines.size(), 10u);

  EXPECT_MLINES_ERROR(witness_metric(k222()), UniversalLinePresent);
  EXPECT_MLINES_ERROR(witness_metric(graph_metric(gen_complete_kpartite(12))), UniversalLinePresent);

  const MetricSpace kp = graph_metric(gen_complete_kpartite(27));
  const WitnessReport r = witness_metric(kp);
  expect_sound(kp, r);
  EXPECT_GE(r.guaranteed_count, 2u);
  EXPECT_EQ(r.formula_value, Rational(static_cast<std::int64_t>(metric_bound(27))));
}

TEST(MetricWitness, SmallSpacesAndThresholds) {
  const MetricSpace tri = validate_metric({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const WitnessReport small = witness_metric(tri);
  EXPECT_EQ(small.guaranteed_count, 3u);
  expect_sound(tri, small);
  for (std::uint64_t t : {0, 1, 5, 100}) {
    WitnessOptions opt;
    opt.threshold = t;
    expect_sound(cycle(9), witness_metric(cycle(9), opt));
  }
}

TEST(BoundedDistancesWitness, AssumptionFailsOnSmallGraphs) {
  for (const Graph& g : support::connected_upto(7)) {
    const MetricSpace m = graph_metric(g);
    const WitnessReport r = witness_bounded_distances(m);
    ASSERT_TRUE(selected(r, "assumption-failed"));
    ASSERT_EQ(r.lines.size(), all_lines(m).size());
    ASSERT_EQ(r.formula_value, Rational(static_cast<std::int64_t>(m.size()),
                                        5 * static_cast<std::int64_t>(distance_set(m).size())));
  }
}

TEST(BoundedDistancesWitness, ForcedConstructionIsSound) {
  WitnessOptions opt;
  opt.assumed_line_count = 0;
  std::mt19937_64 rng(107);
  std::set<std::string> branches;
  for (int round = 0; round < 300; ++round) {
    const MetricSpace m = random_metric(rng, 2 + round % 11, 1 + round % 5);
    const WitnessReport r = witness_bounded_distances(m, opt);
    expect_sound(m, r);
    branches.insert(r.branch_trace.back());
  }
  for (std::size_t n : {5, 6, 8}) expect_sound(cycle(n), witness_bounded_distances(cycle(n), opt));
  expect_sound(k222(), witness_bounded_distances(k222(), opt));
  expect_sound(complete(6), witness_bounded_distances(complete(6), opt));
  EXPECT_GE(branches.size(), 3u);
}

TEST(ThreeMetricWitness, Examples) {
  expect_sound(cycle(6), witness_3metric(cycle(6)));
  expect_sound(cycle(7), witness_3metric(cycle(7)));
  const WitnessReport k4 = witness_3metric(complete(4));
  EXPECT_TRUE(selected(k4, "unit-neighbourhood"));
  EXPECT_EQ(k4.lines.size(), 3u);
  expect_sound(complete(4), k4);
  EXPECT_FALSE(k4.formula_value.has_value());
  EXPECT_MLINES_ERROR(witness_3metric(path(5)), NotA3Metric);
  EXPECT_MLINES_ERROR(witness_3metric(validate_metric({{0, 3}, {3, 0}}, 2)), NotA3Metric);
}

TEST(ThreeMetricWitness, EveryCaseOnRandomThreeMetrics) {
  std::mt19937_64 rng(109);
  std::set<std::string> cases;
  for (int round = 0; round < 400; ++round) {
    const MetricSpace m = random_metric(rng, 2 + round % 12, 3);
    const WitnessReport r = witness_3metric(m);
    expect_sound(m, r);
    cases.insert(r.branch_trace.front());
  }
  EXPECT_EQ(cases.size(), 3u);
}

TEST(ThreeMetricWitness, ScaledDistances) {
  const MetricSpace m = validate_metric({{0, 2, 4}, {2, 0, 2}, {4, 2, 0}}, 2);
  expect_sound(m, witness_3metric(m));
}

TEST(GraphAlphaWitness, SubdividedPathFamily) {
  const MetricSpace m = graph_metric(gen_subdivided_path(2));
  const auto family = alpha_family(m);
  ASSERT_GE(family.size(), 2u);
  const WitnessReport r = witness_graph_alpha(m, family);
  expect_sound(m, r);
  const auto q = static_cast<std::int64_t>(family.size());
  const auto d = diameter(m).value;
  EXPECT_EQ(r.formula_value, Rational(q * q, 2 * d * d));
}

TEST(GraphAlphaWitness, TwoPairsAndOrientation) {
  const MetricSpace p6 = path(6);
  const std::vector<Edge> two{{0, 2}, {3, 5}};
  const WitnessReport r = witness_graph_alpha(p6, two);
  EXPECT_LE(r.lines.size(), 1u);
  EXPECT_TRUE(r.verified_distinct);
  // pairs listed back to front need the swap
  const std::vector<Edge> swapped{{0, 2}, {5, 3}, {4, 2}};
  const WitnessReport s = witness_graph_alpha(p6, swapped);
  expect_sound(p6, s);
  const MetricSpace m = graph_metric(gen_subdivided_path(3));
  auto family = alpha_family(m);
  for (std::size_t i = 0; i < family.size(); i += 2) std::swap(family[i].first, family[i].second);
  expect_sound(m, witness_graph_alpha(m, family));
}

TEST(GraphAlphaWitness, Preconditions) {
  EXPECT_MLINES_ERROR(witness_graph_alpha(cycle(5), {}), PreconditionUnmet);
  EXPECT_MLINES_ERROR(witness_graph_alpha(cycle(5), {{0, 1}}), PreconditionUnmet);
  EXPECT_MLINES_ERROR(witness_graph_alpha(cycle(4), {{0, 2}, {1, 3}}), PreconditionUnmet);
  EXPECT_MLINES_ERROR(witness_graph_alpha(validate_metric({{0, 2}, {2, 0}}), {{0, 1}}), PreconditionUnmet);
}

TEST(GraphGammaWitness, Examples) {
  const WitnessReport c4 = witness_graph_gamma(cycle(4), {{0, 2}, {1, 3}});
  EXPECT_EQ(c4.lines.size(), 1u);
  EXPECT_EQ(c4.guaranteed_count, 1u);
  EXPECT_EQ(c4.formula_value, Rational(2));
  expect_sound(cycle(4), c4);

  const WitnessReport one = witness_graph_gamma(cycle(4), {{0, 2}});
  EXPECT_TRUE(one.lines.empty());
  EXPECT_EQ(one.guaranteed_count, 0u);

  const WitnessReport k = witness_graph_gamma(k222(), {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_EQ(k.lines.size(), 3u);
  expect_sound(k222(), k);

  const WitnessReport c6 = witness_graph_gamma(cycle(6), {{0, 3}, {1, 4}, {2, 5}});
  EXPECT_EQ(c6.lines.size(), 3u);
  expect_sound(cycle(6), c6);

  const WitnessReport c8 = witness_graph_gamma(cycle(8), {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  EXPECT_EQ(c8.lines.size(), 6u);
  expect_sound(cycle(8), c8);

  EXPECT_MLINES_ERROR(witness_graph_gamma(cycle(4), {{0, 1}, {2, 3}}), NotGammaFamily);
}

TEST(GraphWitness, Examples) {
  for (const MetricSpace& m : {graph_metric(gen_complete_kpartite(27)), graph_metric(gen_subdivided_path(2)), cycle(5)}) {
    const WitnessReport r = witness_graph(m);
    expect_sound(m, r);
    EXPECT_EQ(r.construction, "graph");
  }
  EXPECT_MLINES_ERROR(witness_graph(validate_metric({{0, 2, 3}, {2, 0, 2}, {3, 2, 0}})), PreconditionUnmet);
  EXPECT_MLINES_ERROR(witness_graph(path(4)), UniversalLinePresent);
}

TEST(Witnesses, SoundOnAllSmallGraphsAndRandomMetrics) {
  auto run_all = [](const MetricSpace& m) {
    const LineSet lines = all_lines(m);
    for (const WitnessSummary& s : witness_summaries(m, lines)) ASSERT_TRUE(s.sound()) << s.operation << " " << s.failure;
  };
  for (const Graph& g : support::connected_upto(6)) run_all(graph_metric(g));
  std::mt19937_64 rng(113);
  for (int round = 0; round < 300; ++round) run_all(random_metric(rng, 2 + round % 10, 1 + round % 6));
}

TEST(BoundHelpers, MatchDirectSearch) {
  for (std::uint64_t n = 1; n <= 3000; n += 7) {
    std::uint64_t k = 0;
    while (2 * k * k * k * k * k < n * n) ++k;
    ASSERT_EQ(pseudometric_bound(n), k);
    k = 0;
    while (2 * k * k < n) ++k;
    ASSERT_EQ(metric_bound(n), k);
    k = 0;
    while ((2 * k) * (2 * k) * (2 * k) * (2 * k) * (2 * k) * (2 * k) * (2 * k) < n * n * n * n) ++k;
    ASSERT_EQ(graph_bound(n), k);
    for (std::uint64_t d : {1, 2, 5}) {
      k = 0;
      while (128 * k * k * k * d * d * d * d < n * n * n * n) ++k;
      ASSERT_EQ(diameter_graph_bound(n, d), k);
    }
  }
  EXPECT_EQ(bounded_distances_bound(5, 3), Rational(1, 3));
  EXPECT_EQ(bounded_distances_bound(4, 2), Rational(2, 5));
}

TEST(LinesDistinct, DetectsRepeats) {
  const Line a = line(cycle(5), 0, 1);
  const Line b = line(cycle(5), 1, 2);
  EXPECT_TRUE(lines_distinct({a, b}));
  EXPECT_FALSE(lines_distinct({a, b, a}));
  EXPECT_TRUE(lines_distinct({}));
}

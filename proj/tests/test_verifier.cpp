#include <random>
#include <sstream>

#include "mlines/io.hpp"
#include "mlines/verifier.hpp"
#include "support.hpp"

using namespace mlines;
using support::complete;
using support::cycle;
using support::path;

namespace {

std::string corpus_upto(std::size_t max_n) {
  std::string out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) out += to_graph6(g) + "\n";
  return out;
}

std::pair<ScanAggregate, std::string> scan(const std::string& corpus, ScanOptions opt) {
  std::istringstream in(corpus);
  std::ostringstream out;
  const ScanAggregate a = scan_corpus(in, opt, out);
  return {a, out.str()};
}

const BoundEntry& entry(const BoundReport& r, const std::string& name) {
  for (const auto& b : r.bounds)
    if (b.name == name) return b;
  throw std::runtime_error("no bound " + name);
}

}  // namespace

TEST(Conjecture, Examples) {
  const ConjectureResult c5 = verify_conjecture(cycle(5));
  EXPECT_FALSE(c5.universal);
  EXPECT_EQ(c5.line_count, 10u);
  EXPECT_TRUE(c5.holds);

  const ConjectureResult p4 = verify_conjecture(path(4));
  EXPECT_TRUE(p4.universal);
  EXPECT_TRUE(p4.holds);

  const ConjectureResult two = verify_conjecture(path(2));
  EXPECT_TRUE(two.universal);
  EXPECT_EQ(two.line_count, 1u);
  EXPECT_TRUE(two.holds);

  EXPECT_TRUE(verify_conjecture(induced_betweenness(cycle(7)), 2).holds);
}

TEST(Conjecture, MatchesOracleOnSmallGraphs) {
  for (const Graph& g : support::connected_upto(6)) {
    const MetricSpace m = graph_metric(g);
    const auto d = support::matrix_of(m);
    const ConjectureResult r = verify_conjecture(m);
    ASSERT_EQ(r.universal, oracle::has_universal(d));
    ASSERT_EQ(r.line_count, oracle::lines(d).size());
    ASSERT_EQ(r.holds, r.universal || r.line_count >= m.size());
  }
}

TEST(Bounds, CycleFive) {
  const BoundReport r = verify_bounds(cycle(5));
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.line_count, 10u);
  EXPECT_EQ(r.w, 3u);
  EXPECT_EQ(r.diameter, Rational(2));
  const BoundEntry& bd = entry(r, "bounded-distances");
  EXPECT_EQ(bd.formula_value, Rational(1, 3));
  EXPECT_TRUE(bd.asserted);
  EXPECT_TRUE(bd.satisfied);
  EXPECT_EQ(entry(r, "bounded-distances-nonzero").formula_value, Rational(1, 2));
  EXPECT_EQ(entry(r, "pseudometric").formula_value, Rational(2));
  EXPECT_EQ(entry(r, "metric").formula_value, Rational(2));
  EXPECT_TRUE(r.asserted_ok());
  for (const auto& b : r.bounds) EXPECT_EQ(b.asserted, b.name == "bounded-distances") << b.name;
}

TEST(Bounds, CompleteGraphFour) {
  const BoundReport r = verify_bounds(complete(4));
  EXPECT_EQ(r.line_count, 6u);
  EXPECT_EQ(r.w, 2u);
  EXPECT_EQ(entry(r, "bounded-distances").formula_value, Rational(2, 5));
  EXPECT_EQ(entry(r, "bounded-distances-nonzero").formula_value, Rational(4, 5));
  EXPECT_TRUE(r.asserted_ok());
}

TEST(Bounds, NonGraphMetricAndRelation) {
  const BoundReport r = verify_bounds(validate_metric({{0, 2, 3}, {2, 0, 2}, {3, 2, 0}}));
  for (const auto& b : r.bounds) EXPECT_NE(b.name, "graph");
  const BoundReport rel = verify_bounds(induced_betweenness(cycle(5)));
  ASSERT_EQ(rel.bounds.size(), 1u);
  EXPECT_EQ(rel.bounds[0].name, "pseudometric");
  EXPECT_FALSE(rel.w.has_value());
}

TEST(Bounds, AssertedBoundHoldsOnRandomMetrics) {
  std::mt19937_64 rng(131);
  for (int round = 0; round < 500; ++round) {
    const MetricSpace m = random_metric(rng, 2 + round % 11, 1 + round % 6);
    const BoundReport r = verify_bounds(m);
    ASSERT_TRUE(r.asserted_ok());
    const auto w = static_cast<std::int64_t>(*r.w);
    ASSERT_EQ(entry(r, "bounded-distances").formula_value, Rational(static_cast<std::int64_t>(m.size()), 5 * w));
  }
}

TEST(RandomMetric, IsAMetricWithinRange) {
  std::mt19937_64 rng(137);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 1 + round % 10;
    const MetricSpace m = random_metric(rng, n, 6);
    ASSERT_EQ(m.size(), n);
    const auto d = support::matrix_of(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) ASSERT_LE(d[i][k], d[i][j] + d[j][k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) ASSERT_TRUE(d[i][j] >= 1 && d[i][j] <= 6);
  }
}

TEST(Scan, SmallCorpusHasNoViolations) {
  const auto [a, text] = scan(corpus_upto(6), {});
  EXPECT_EQ(a.instances, 1u + 2 + 6 + 21 + 112);
  EXPECT_EQ(a.parse_errors, 0u);
  EXPECT_TRUE(a.ok());
  EXPECT_TRUE(a.min_margin.has_value());
  std::istringstream lines(text);
  std::string l, last;
  std::size_t count = 0;
  while (std::getline(lines, l)) {
    const Json j = Json::parse(l);
    if (!j.contains("aggregate")) ASSERT_EQ(j.at("id"), count++);
    last = l;
  }
  EXPECT_EQ(count, a.instances);
  EXPECT_EQ(Json::parse(last).at("aggregate"), aggregate_to_json(a));
}

TEST(Scan, DeterministicAcrossJobs) {
  const std::string corpus = corpus_upto(6);
  ScanOptions one;
  one.witnesses = true;
  ScanOptions many = one;
  many.jobs = 8;
  EXPECT_EQ(scan(corpus, one).second, scan(corpus, many).second);
}

TEST(Scan, ParseErrorsAndEmptyInput) {
  const auto [a, text] = scan("Dhc\n!!notgraph6\n\nD~{\n", {});
  EXPECT_EQ(a.instances, 3u);
  EXPECT_EQ(a.parse_errors, 1u);
  EXPECT_NE(text.find("\"error\""), std::string::npos);

  const auto [empty, etext] = scan("", {});
  EXPECT_EQ(empty.instances, 0u);
  EXPECT_TRUE(empty.ok());
  EXPECT_FALSE(empty.min_margin.has_value());
  EXPECT_NE(etext.find("aggregate"), std::string::npos);
}

TEST(Scan, OtherFormats) {
  ScanOptions el;
  el.format = CorpusFormat::EdgeList;
  const auto [a, text] = scan("0 1\n1 2\n2 3\n3 4\n4 0\n\n# path\n0 1\n1 2\n\n0 x\n", el);
  EXPECT_EQ(a.instances, 3u);
  EXPECT_EQ(a.parse_errors, 1u);
  EXPECT_NE(text.find("\"line_count\":10"), std::string::npos);

  ScanOptions mj;
  mj.format = CorpusFormat::MatrixJson;
  const std::string c5 = metric_to_json(cycle(5)).dump() + "\n";
  const auto [b, btext] = scan(c5 + c5, mj);
  EXPECT_EQ(b.instances, 2u);
  EXPECT_TRUE(b.ok());

  EXPECT_EQ(parse_corpus_format("graph6"), CorpusFormat::Graph6);
  EXPECT_MLINES_ERROR(parse_corpus_format("xml"), MalformedInput);
}

TEST(Scaling, KPartite) {
  const ScalingFit f = scaling_fit(Family::KPartite, {27, 64, 125});
  EXPECT_EQ(f.points, (std::vector<std::size_t>{27, 64, 125}));
  ASSERT_EQ(f.counts.size(), 3u);
  EXPECT_LT(f.counts[0], f.counts[1]);
  EXPECT_LT(f.counts[1], f.counts[2]);
  EXPECT_GT(f.slope, 0.5);
  EXPECT_EQ(f.consistent, f.slope >= 1.1 && f.slope <= 1.6);
  EXPECT_EQ(scaling_fit_to_json(f).at("family"), "kpartite");
}

TEST(Scaling, SubdividedPath) {
  const ScalingFit f = scaling_fit(Family::SubdividedPath, {2, 3, 4});
  EXPECT_EQ(f.points[0], subdivided_path_vertex_count(2));
  EXPECT_LT(f.counts[0], f.counts[1]);
  EXPECT_LT(f.counts[1], f.counts[2]);
}

TEST(Scaling, Errors) {
  EXPECT_MLINES_ERROR(scaling_fit(Family::KPartite, {27}), TooFewSizes);
  EXPECT_MLINES_ERROR(scaling_fit(Family::KPartite, {12, 27, 64}), UniversalLineInFamily);
  EXPECT_EQ(parse_family("subdivided-path"), Family::SubdividedPath);
  EXPECT_EQ(family_name(Family::KPartite), "kpartite");
}

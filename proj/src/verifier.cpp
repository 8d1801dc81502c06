#include "mlines/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <thread>

#include "mlines/graph_metrics.hpp"
#include "mlines/io.hpp"
#include "mlines/witnesses.hpp"

namespace mlines {

namespace {

bool rational_less(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

BoundEntry integer_bound(std::string name, std::uint64_t least, std::size_t count, bool universal) {
  // A universal line makes the no-universal-line theorems vacuous.
  return {std::move(name), Rational(static_cast<std::int64_t>(least)), universal || count >= least, false};
}

template <class F>
WitnessSummary summarize(const std::string& op, const LineSet& lines, F&& run) {
  WitnessSummary s;
  s.operation = op;
  try {
    const WitnessReport r = run();
    s.construction = r.construction;
    s.line_count = r.lines.size();
    s.guaranteed_count = r.guaranteed_count;
    s.verified_distinct = r.verified_distinct && lines_distinct(r.lines);
    for (const auto& l : r.lines) {
      if (!lines.contains(l.members)) s.subset_of_lines = false;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UniversalLinePresent || e.code() == ErrorCode::NotA3Metric ||
        e.code() == ErrorCode::PreconditionUnmet) {
      s.skipped = std::string(to_string(e.code()));
    } else {
      s.failure = e.what();
    }
  }
  return s;
}

}  // namespace

template <BetweennessSource S>
ConjectureResult verify_conjecture(const S& s, std::size_t jobs) {
  if (s.size() < 2) throw Error(ErrorCode::TooFewPoints, "needs at least 2 points");
  const LineSet lines = all_lines(s, jobs);
  ConjectureResult r;
  r.line_count = lines.size();
  const PointSet full = PointSet::full(s.size());
  r.universal = lines.contains(full);
  r.holds = r.universal || r.line_count >= s.size();
  return r;
}

template ConjectureResult verify_conjecture(const MetricSpace&, std::size_t);
template ConjectureResult verify_conjecture(const BetweennessRelation&, std::size_t);

bool BoundReport::asserted_ok() const noexcept {
  for (const auto& b : bounds)
    if (b.asserted && !b.satisfied) return false;
  for (const auto& w : witnesses)
    if (!w.sound()) return false;
  return true;
}

BoundReport verify_bounds(const BetweennessRelation& b, std::size_t jobs) {
  const ConjectureResult c = verify_conjecture(b, jobs);
  BoundReport r;
  r.n = b.size();
  r.line_count = c.line_count;
  r.universal = c.universal;
  r.conjecture_holds = c.holds;
  r.bounds.push_back(integer_bound("pseudometric", pseudometric_bound(r.n), r.line_count, r.universal));
  return r;
}

BoundReport verify_bounds(const MetricSpace& m, std::size_t jobs) {
  const ConjectureResult c = verify_conjecture(m, jobs);
  BoundReport r;
  r.n = m.size();
  r.line_count = c.line_count;
  r.universal = c.universal;
  r.conjecture_holds = c.holds;
  const Diameter dia = diameter(m);
  r.diameter = Rational(dia.value, m.scale());
  const std::size_t w = distance_set(m).size();
  r.w = w;
  const auto n = static_cast<std::int64_t>(r.n);
  const auto count = static_cast<std::int64_t>(r.line_count);
  r.bounds.push_back(integer_bound("pseudometric", pseudometric_bound(r.n), r.line_count, r.universal));
  r.bounds.push_back(integer_bound("metric", metric_bound(r.n), r.line_count, r.universal));
  r.bounds.push_back({"bounded-distances", bounded_distances_bound(r.n, w),
                      5 * static_cast<std::int64_t>(w) * count >= n, true});
  r.bounds.push_back({"bounded-distances-nonzero", bounded_distances_bound(r.n, w - 1),
                      5 * static_cast<std::int64_t>(w - 1) * count >= n, false});
  if (is_graph_metric(m)) {
    const auto d = static_cast<std::uint64_t>(dia.value / m.scale());
    // No universal-line escape: this one holds for every graph metric.
    r.bounds.push_back(integer_bound("diameter-graph", diameter_graph_bound(r.n, d), r.line_count, false));
    r.bounds.push_back(integer_bound("graph", graph_bound(r.n), r.line_count, r.universal));
  }
  return r;
}

std::vector<WitnessSummary> witness_summaries(const MetricSpace& m, const LineSet& lines) {
  std::vector<WitnessSummary> out;
  out.push_back(summarize("geodesic", lines, [&] { return witness_from_geodesic(m, longest_geodesic(m)); }));
  out.push_back(summarize("pseudometric", lines, [&] { return witness_pseudometric(m); }));
  out.push_back(summarize("metric", lines, [&] { return witness_metric(m); }));
  out.push_back(summarize("bounded-distances", lines, [&] { return witness_bounded_distances(m); }));
  out.push_back(summarize("3metric", lines, [&] { return witness_3metric(m); }));
  out.push_back(summarize("graph", lines, [&] { return witness_graph(m); }));
  return out;
}

MetricSpace random_metric(std::mt19937_64& rng, std::size_t n, Dist max_dist) {
  if (n < 1) throw Error(ErrorCode::TooFewPoints, "needs at least 1 point");
  std::uniform_int_distribution<Dist> pick(1, max_dist);
  DistMatrix d(n, std::vector<Dist>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = pick(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return validate_metric(d);
}

CorpusFormat parse_corpus_format(const std::string& name) {
  if (name == "graph6") return CorpusFormat::Graph6;
  if (name == "edgelist") return CorpusFormat::EdgeList;
  if (name == "matrix-json") return CorpusFormat::MatrixJson;
  throw Error(ErrorCode::MalformedInput, "unknown corpus format \"" + name + "\"");
}

namespace {

struct Record {
  std::size_t id = 0;
  std::string text;
};

// Reads the next instance; graph6 and matrix-json take one per non-blank
// line, edge lists are separated by blank lines.
bool next_record(std::istream& in, CorpusFormat format, std::size_t& line_no, Record& rec) {
  std::string line;
  rec.text.clear();
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (format != CorpusFormat::EdgeList) {
      if (blank) continue;
      rec.text = line;
      return true;
    }
    if (blank) {
      if (!rec.text.empty()) return true;
      continue;
    }
    rec.text += line;
    rec.text += '\n';
  }
  return !rec.text.empty();
}

struct Outcome {
  std::string json;
  bool parse_error = false;
  bool conjecture_violated = false;
  bool bound_violated = false;
  std::size_t witness_failures = 0;
  std::optional<Rational> margin;
};

Outcome process(const Record& rec, const ScanOptions& opt) {
  Outcome o;
  Json row{{"id", rec.id}};
  MetricSpace m;
  try {
    switch (opt.format) {
      case CorpusFormat::Graph6:
        row["graph6"] = rec.text;
        m = graph_metric(parse_graph6(rec.text));
        break;
      case CorpusFormat::EdgeList:
        m = graph_metric(parse_edge_list(rec.text));
        break;
      case CorpusFormat::MatrixJson:
        m = metric_from_json(Json::parse(rec.text));
        break;
    }
    if (m.size() < 2) throw Error(ErrorCode::TooFewPoints, "needs at least 2 points");
  } catch (const std::exception& e) {
    o.parse_error = true;
    row["error"] = e.what();
    o.json = row.dump();
    return o;
  }
  BoundReport r = verify_bounds(m);
  if (opt.conjecture && !r.conjecture_holds) o.conjecture_violated = true;
  if (opt.bounds) {
    for (const auto& b : r.bounds)
      if (b.asserted && !b.satisfied) o.bound_violated = true;
    const auto w = static_cast<std::int64_t>(*r.w);
    o.margin = Rational(5 * w * static_cast<std::int64_t>(r.line_count) - static_cast<std::int64_t>(r.n), 5 * w);
  }
  if (opt.witnesses) {
    r.witnesses = witness_summaries(m, all_lines(m));
    for (const auto& s : r.witnesses)
      if (!s.sound()) ++o.witness_failures;
  }
  Json report = bound_report_to_json(r);
  if (!opt.bounds) report.erase("bounds");
  row["report"] = std::move(report);
  o.json = row.dump();
  return o;
}

}  // namespace

ScanAggregate scan_corpus(std::istream& in, const ScanOptions& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
  const std::size_t batch_size = 64 * jobs;
  ScanAggregate agg;
  std::size_t line_no = 0;
  std::vector<Record> batch;
  std::vector<Outcome> results;
  for (bool more = true; more;) {
    batch.clear();
    Record rec;
    while (batch.size() < batch_size && (more = next_record(in, opt.format, line_no, rec))) {
      rec.id = agg.instances + batch.size();
      batch.push_back(rec);
    }
    if (batch.empty()) break;
    results.assign(batch.size(), Outcome{});
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t i; (i = cursor.fetch_add(1)) < batch.size();) results[i] = process(batch[i], opt);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(jobs, batch.size()); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const Outcome& o = results[i];
      out << o.json << '\n';
      ++agg.instances;
      if (o.parse_error) ++agg.parse_errors;
      if (o.conjecture_violated) ++agg.conjecture_violations;
      if (o.bound_violated) ++agg.bound_violations;
      agg.witness_failures += o.witness_failures;
      if (o.margin && (!agg.min_margin || rational_less(*o.margin, *agg.min_margin))) {
        agg.min_margin = o.margin;
        agg.min_margin_instance = batch[i].id;
      }
    }
  }
  out << Json{{"aggregate", aggregate_to_json(agg)}}.dump() << '\n';
  agg.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return agg;
}

Family parse_family(const std::string& name) {
  if (name == "kpartite") return Family::KPartite;
  if (name == "subdivided-path") return Family::SubdividedPath;
  throw Error(ErrorCode::MalformedInput, "unknown family \"" + name + "\"");
}

std::string family_name(Family f) { return f == Family::KPartite ? "kpartite" : "subdivided-path"; }

ScalingFit scaling_fit(Family family, const std::vector<std::size_t>& sizes, std::size_t jobs) {
  if (sizes.size() < 3) throw Error(ErrorCode::TooFewSizes, "a fit needs at least 3 sizes");
  ScalingFit fit;
  fit.family = family;
  fit.sizes = sizes;
  for (std::size_t size : sizes) {
    const Graph g = family == Family::KPartite ? gen_complete_kpartite(size) : gen_subdivided_path(size);
    const MetricSpace m = graph_metric(g);
    const LineSet lines = all_lines(m, jobs);
    if (lines.contains(PointSet::full(m.size()))) {
      throw Error(ErrorCode::UniversalLineInFamily, family_name(family) + " instance " + std::to_string(size) +
                                                        " has a universal line", {size});
    }
    fit.points.push_back(m.size());
    fit.counts.push_back(lines.size());
  }
  const auto k = static_cast<double>(sizes.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    xs.push_back(std::log(static_cast<double>(fit.points[i])));
    ys.push_back(std::log(static_cast<double>(fit.counts[i])));
    sx += xs.back();
    sy += ys.back();
    sxx += xs.back() * xs.back();
    sxy += xs.back() * ys.back();
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0) throw Error(ErrorCode::TooFewSizes, "a fit needs at least 3 distinct sizes");
  fit.slope = (k * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.slope * sx) / k;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (intercept + fit.slope * xs[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / k);
  fit.consistent = fit.slope >= 1.1 && fit.slope <= 1.6;
  return fit;
}

}  // namespace mlines

#include "mlines/io.hpp"

#include <algorithm>
#include <charconv>

namespace mlines {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("bad value for ") + what);
  }
}

Json points_json(const PointSet& s) {
  Json out = Json::array();
  s.for_each([&](PointId p) { out.push_back(p); });
  return out;
}

PointSet points_from_json(const Json& j, std::size_t universe) {
  PointSet s(universe);
  for (const auto& v : j) {
    const auto p = get<std::size_t>(v, "point");
    if (p >= universe) throw Error(ErrorCode::PointOutOfRange, "point index out of range", {p});
    s.insert(static_cast<PointId>(p));
  }
  return s;
}

Json edge_json(const Edge& e) { return Json::array({e.first, e.second}); }

Edge edge_from_json(const Json& j) {
  const auto v = get<std::vector<PointId>>(j, "pair");
  if (v.size() != 2) malformed("a pair needs two points");
  return {v[0], v[1]};
}

}  // namespace

Json metric_to_json(const MetricSpace& m) {
  return Json{{"n", m.size()}, {"scale", m.scale()}, {"dist", m.matrix()}};
}

MetricSpace metric_from_json(const Json& j) {
  const auto dist = get<DistMatrix>(field(j, "dist"), "dist");
  const Dist scale = j.contains("scale") ? get<Dist>(j.at("scale"), "scale") : 1;
  if (scale <= 0) malformed("scale must be positive");
  if (j.contains("n") && get<std::size_t>(j.at("n"), "n") != dist.size()) malformed("n does not match dist");
  return validate_metric(dist, scale);
}

std::string metric_to_csv(const MetricSpace& m) {
  std::string out;
  for (PointId i = 0; i < m.size(); ++i) {
    for (PointId j = 0; j < m.size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(m.dist(i, j));
    }
    out += '\n';
  }
  return out;
}

MetricSpace metric_from_csv(std::string_view text, Dist scale) {
  DistMatrix rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view row = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    if (row.find_first_not_of(" \t") == std::string_view::npos) continue;
    std::vector<Dist> values;
    while (true) {
      const auto comma = row.find(',');
      std::string_view cell = row.substr(0, comma);
      while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
      while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t')) cell.remove_suffix(1);
      Dist v = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        throw Error(ErrorCode::MalformedInput, "bad integer on CSV line " + std::to_string(line_no), {line_no});
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      row.remove_prefix(comma + 1);
    }
    rows.push_back(std::move(values));
  }
  return validate_metric(rows, scale);
}

Json relation_to_json(const BetweennessRelation& b) {
  Json triples = Json::array();
  for (const auto& t : b.triples()) triples.push_back(Json::array({t[0], t[1], t[2]}));
  return Json{{"n", b.size()}, {"triples", triples}};
}

BetweennessRelation relation_from_json(const Json& j) {
  const auto n = get<std::size_t>(field(j, "n"), "n");
  std::vector<Triple> raw;
  for (const auto& t : field(j, "triples")) {
    const auto v = get<std::vector<PointId>>(t, "triple");
    if (v.size() != 3) malformed("a triple needs three points");
    raw.push_back({v[0], v[1], v[2]});
  }
  return validate_axioms(raw, n);
}

Json lines_to_json(const LineSet& lines) {
  Json out = Json::array();
  for (const auto& e : lines.entries()) {
    Json gens = Json::array();
    for (const auto& g : e.generators) gens.push_back(edge_json(g));
    out.push_back(Json{{"members", points_json(e.members)}, {"generators", gens}});
  }
  return out;
}

LineSet lines_from_json(const Json& j, std::size_t universe) {
  if (!j.is_array()) malformed("line set must be an array");
  std::vector<LineEntry> entries;
  for (const auto& e : j) {
    LineEntry entry{points_from_json(field(e, "members"), universe), {}};
    for (const auto& g : field(e, "generators")) entry.generators.push_back(edge_from_json(g));
    entries.push_back(std::move(entry));
  }
  return LineSet(universe, std::move(entries));
}

Json graph_to_json(const Graph& g) {
  Json adj = Json::array();
  for (PointId v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
  return Json{{"n", g.size()}, {"adjacency", adj}};
}

Graph graph_from_json(const Json& j) {
  const auto n = get<std::size_t>(field(j, "n"), "n");
  const Json& adj = field(j, "adjacency");
  if (!adj.is_array() || adj.size() != n) malformed("adjacency must have n rows");
  Graph g(n);
  for (PointId u = 0; u < n; ++u) {
    const auto row = get<std::vector<PointId>>(adj[u], "adjacency row");
    for (PointId v : row) {
      if (v >= n) throw Error(ErrorCode::PointOutOfRange, "vertex out of range", {u, v});
      if (u < v) g.add_edge(u, v);
      if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop", {u});
    }
  }
  for (PointId u = 0; u < n; ++u) {
    for (PointId v : get<std::vector<PointId>>(adj[u], "adjacency row")) {
      if (v < u && !g.has_edge(v, u)) malformed("adjacency is not symmetric");
    }
    if (g.degree(u) != adj[u].size()) malformed("adjacency is not symmetric");
  }
  return g;
}

template <BetweennessSource S>
std::vector<Classification> classify_line(const S& s, const LineSet& lines, const PointSet& line) {
  const auto& gens = lines.at(line).generators;
  std::vector<Classification> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      out.push_back({gens[i], gens[j], classify_pair_relation(s, gens[i], gens[j])});
  return out;
}

template std::vector<Classification> classify_line(const MetricSpace&, const LineSet&, const PointSet&);
template std::vector<Classification> classify_line(const BetweennessRelation&, const LineSet&, const PointSet&);

Json classification_to_json(const std::vector<Classification>& c) {
  Json out = Json::array();
  for (const auto& x : c) {
    out.push_back(
        Json{{"pairA", edge_json(x.pair_a)}, {"pairB", edge_json(x.pair_b)}, {"relations", x.relations.names()}});
  }
  return out;
}

std::vector<Classification> classification_from_json(const Json& j) {
  if (!j.is_array()) malformed("classification must be an array");
  std::vector<Classification> out;
  for (const auto& x : j) {
    Classification c{edge_from_json(field(x, "pairA")), edge_from_json(field(x, "pairB")), {}};
    for (const auto& r : field(x, "relations")) {
      const auto name = get<std::string>(r, "relation");
      if (name == "alpha") {
        c.relations.alpha = true;
      } else if (name == "beta") {
        c.relations.beta = true;
      } else if (name == "gamma") {
        c.relations.gamma = true;
      } else {
        malformed("unknown relation \"" + name + "\"");
      }
    }
    out.push_back(c);
  }
  return out;
}

Json rational_to_json(const Rational& r) { return Json{{"num", r.num}, {"den", r.den}}; }

Rational rational_from_json(const Json& j) {
  const auto den = get<std::int64_t>(field(j, "den"), "den");
  if (den == 0) malformed("zero denominator");
  return Rational(get<std::int64_t>(field(j, "num"), "num"), den);
}

Json witness_to_json(const WitnessReport& r) {
  Json lines = Json::array();
  for (const auto& l : r.lines) lines.push_back(points_json(l.members));
  return Json{{"construction", r.construction},
              {"branch_trace", r.branch_trace},
              {"lines", lines},
              {"guaranteed_count", r.guaranteed_count},
              {"verified_distinct", r.verified_distinct},
              {"formula_value", r.formula_value ? rational_to_json(*r.formula_value) : Json(nullptr)}};
}

WitnessReport witness_from_json(const Json& j) {
  WitnessReport r;
  r.construction = get<std::string>(field(j, "construction"), "construction");
  r.branch_trace = get<std::vector<std::string>>(field(j, "branch_trace"), "branch_trace");
  std::size_t universe = 0;
  const auto lists = get<std::vector<std::vector<std::size_t>>>(field(j, "lines"), "lines");
  for (const auto& l : lists)
    for (std::size_t p : l) universe = std::max(universe, p + 1);
  for (const auto& l : lists) {
    if (l.size() < 2) malformed("a line has at least two points");
    PointSet members(universe);
    for (std::size_t p : l) members.insert(static_cast<PointId>(p));
    const auto m = members.members();
    r.lines.push_back({members, {m[0], m[1]}});
  }
  r.guaranteed_count = get<std::size_t>(field(j, "guaranteed_count"), "guaranteed_count");
  r.verified_distinct = get<bool>(field(j, "verified_distinct"), "verified_distinct");
  const Json& f = field(j, "formula_value");
  if (!f.is_null()) r.formula_value = rational_from_json(f);
  return r;
}

Json conjecture_to_json(const ConjectureResult& r) {
  return Json{{"universal", r.universal}, {"line_count", r.line_count}, {"holds", r.holds}};
}

Json bound_report_to_json(const BoundReport& r) {
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    bounds.push_back(Json{{"name", b.name},
                          {"formula_value", rational_to_json(b.formula_value)},
                          {"satisfied_with_o1_zero", b.satisfied},
                          {"asserted", b.asserted}});
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json x{{"operation", w.operation}};
    if (!w.skipped.empty()) {
      x["skipped"] = w.skipped;
    } else if (!w.failure.empty()) {
      x["failure"] = w.failure;
    } else {
      x["construction"] = w.construction;
      x["line_count"] = w.line_count;
      x["guaranteed_count"] = w.guaranteed_count;
      x["verified_distinct"] = w.verified_distinct;
      x["subset_of_lines"] = w.subset_of_lines;
    }
    witnesses.push_back(std::move(x));
  }
  Json out{{"n", r.n},
           {"diameter", r.diameter ? rational_to_json(*r.diameter) : Json(nullptr)},
           {"w", r.w ? Json(*r.w) : Json(nullptr)},
           {"line_count", r.line_count},
           {"universal", r.universal},
           {"conjecture_holds", r.conjecture_holds},
           {"bounds", bounds}};
  if (!r.witnesses.empty()) out["witnesses"] = witnesses;
  return out;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.n = get<std::size_t>(field(j, "n"), "n");
  if (!field(j, "diameter").is_null()) r.diameter = rational_from_json(j.at("diameter"));
  if (!field(j, "w").is_null()) r.w = get<std::size_t>(j.at("w"), "w");
  r.line_count = get<std::size_t>(field(j, "line_count"), "line_count");
  r.universal = get<bool>(field(j, "universal"), "universal");
  r.conjecture_holds = get<bool>(field(j, "conjecture_holds"), "conjecture_holds");
  for (const auto& b : field(j, "bounds")) {
    r.bounds.push_back({get<std::string>(field(b, "name"), "name"), rational_from_json(field(b, "formula_value")),
                        get<bool>(field(b, "satisfied_with_o1_zero"), "satisfied_with_o1_zero"),
                        get<bool>(field(b, "asserted"), "asserted")});
  }
  if (j.contains("witnesses")) {
    for (const auto& x : j.at("witnesses")) {
      WitnessSummary w;
      w.operation = get<std::string>(field(x, "operation"), "operation");
      if (x.contains("skipped")) {
        w.skipped = get<std::string>(x.at("skipped"), "skipped");
      } else if (x.contains("failure")) {
        w.failure = get<std::string>(x.at("failure"), "failure");
      } else {
        w.construction = get<std::string>(field(x, "construction"), "construction");
        w.line_count = get<std::size_t>(field(x, "line_count"), "line_count");
        w.guaranteed_count = get<std::size_t>(field(x, "guaranteed_count"), "guaranteed_count");
        w.verified_distinct = get<bool>(field(x, "verified_distinct"), "verified_distinct");
        w.subset_of_lines = get<bool>(field(x, "subset_of_lines"), "subset_of_lines");
      }
      r.witnesses.push_back(std::move(w));
    }
  }
  return r;
}

Json aggregate_to_json(const ScanAggregate& a) {
  return Json{{"instances", a.instances},
              {"parse_errors", a.parse_errors},
              {"conjecture_violations", a.conjecture_violations},
              {"bound_violations", a.bound_violations},
              {"witness_failures", a.witness_failures},
              {"min_margin_instance", a.min_margin_instance ? Json(*a.min_margin_instance) : Json(nullptr)},
              {"min_margin", a.min_margin ? rational_to_json(*a.min_margin) : Json(nullptr)}};
}

Json scaling_fit_to_json(const ScalingFit& f) {
  return Json{{"family", family_name(f.family)}, {"sizes", f.sizes},   {"points", f.points},
              {"counts", f.counts},              {"slope", f.slope},   {"residual", f.residual},
              {"consistent_with_four_thirds", f.consistent}};
}

}  // namespace mlines

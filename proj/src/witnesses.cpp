#include "mlines/witnesses.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>

#include "mlines/poset.hpp"
#include "mlines/relations.hpp"

namespace mlines {

namespace {

struct Candidate {
  std::string tag;
  std::size_t count = 0;
  std::function<std::vector<Line>()> build;
};

WitnessReport select_best(std::string construction, std::vector<std::string> trace,
                          std::vector<Candidate> candidates, std::optional<Rational> formula) {
  WitnessReport r;
  r.construction = std::move(construction);
  r.branch_trace = std::move(trace);
  const Candidate* best = nullptr;
  for (const auto& c : candidates) {
    r.branch_trace.push_back(c.tag + ": " + std::to_string(c.count));
    if (best == nullptr || c.count > best->count) best = &c;
  }
  if (best != nullptr) {
    r.lines = best->build();
    r.guaranteed_count = best->count;
    r.branch_trace.push_back("selected: " + best->tag);
  } else {
    r.branch_trace.emplace_back("selected: none");
  }
  r.verified_distinct = lines_distinct(r.lines);
  r.formula_value = formula;
  return r;
}

std::vector<std::size_t> wide(std::initializer_list<PointId> pts) { return {pts.begin(), pts.end()}; }

template <BetweennessSource S>
void require_no_universal_line(const S& s) {
  if (s.size() < 2) throw Error(ErrorCode::TooFewPoints, "needs at least 2 points");
  if (auto u = universal_line(s)) {
    throw Error(ErrorCode::UniversalLinePresent, "the space has a universal line",
                wide({u->generator.first, u->generator.second}));
  }
}

template <BetweennessSource S>
std::vector<Line> geodesic_lines(const S& s, const std::vector<PointId>& geo) {
  std::vector<Line> out;
  for (std::size_t i = 0; i + 1 < geo.size(); ++i) {
    const Line step = line(s, geo[i], geo[i + 1]);
    PointId q = 0;
    while (q < s.size() && step.members.contains(q)) ++q;
    if (q == s.size()) {
      throw Error(ErrorCode::UniversalLinePresent, "line through consecutive geodesic points is universal",
                  wide({geo[i], geo[i + 1]}));
    }
    out.push_back(line(s, geo[i], q));
  }
  out.push_back(line(s, geo.front(), geo.back()));
  return out;
}

template <BetweennessSource S>
std::vector<Line> pair_lines(const S& s, const std::vector<PointId>& pts) {
  std::vector<Line> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(line(s, pts[i], pts[j]));
  return out;
}

template <BetweennessSource S>
bool has_collinear_triple(const S& s, const std::vector<PointId>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const PointId a = pts[i], b = pts[j], c = pts[k];
        if (s.between(a, b, c) || s.between(b, c, a) || s.between(c, a, b)) return true;
      }
  return false;
}

// Lines {anchor y : y in ys} grouped by equality. Offers the distinct lines,
// the pairs inside the largest group (which has no collinear triple), and,
// when `whole_set` holds and ys itself has no collinear triple, all pairs of ys.
template <BetweennessSource S>
void bucket_candidates(const S& s, PointId anchor, const std::vector<PointId>& ys, const std::string& prefix,
                       bool whole_set, std::vector<Candidate>& out) {
  if (ys.empty()) return;
  std::vector<Line> reps;
  std::vector<std::vector<PointId>> groups;
  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  for (PointId y : ys) {
    Line l = line(s, anchor, y);
    auto [it, inserted] = index.try_emplace(l.members, groups.size());
    if (inserted) {
      reps.push_back(std::move(l));
      groups.emplace_back();
    }
    groups[it->second].push_back(y);
  }
  out.push_back({prefix + "distinct-lines", reps.size(), [reps] { return reps; }});
  std::size_t big = 0;
  for (std::size_t g = 1; g < groups.size(); ++g)
    if (groups[g].size() > groups[big].size()) big = g;
  const std::vector<PointId> bucket = groups[big];
  out.push_back({prefix + "same-line-bucket(" + std::to_string(bucket.size()) + ")", binom2(bucket.size()),
                 [&s, bucket] { return pair_lines(s, bucket); }});
  if (whole_set && ys.size() > bucket.size() && !has_collinear_triple(s, ys)) {
    out.push_back({prefix + "noncollinear-antichain(" + std::to_string(ys.size()) + ")", binom2(ys.size()),
                   [&s, ys] { return pair_lines(s, ys); }});
  }
}

std::vector<Line> mapped_subspace_lines(const MetricSpace& m, const std::vector<PointId>& pts, std::size_t jobs) {
  const MetricSpace sub = subspace(m, pts);
  const LineSet sl = all_lines(sub, jobs);
  std::vector<Line> out;
  for (const auto& e : sl.entries()) {
    const auto [p, q] = e.generators.front();
    out.push_back(line(m, sub.parent_index(p), sub.parent_index(q)));
  }
  return out;
}

std::vector<Line> entry_lines(const MetricSpace& m, const LineSet& lines, const std::function<bool(const Edge&)>& keep) {
  std::vector<Line> out;
  for (const auto& e : lines.entries()) {
    for (const Edge& g : e.generators) {
      if (keep(g)) {
        out.push_back(line(m, g.first, g.second));
        break;
      }
    }
  }
  return out;
}

void require_graph_metric(const MetricSpace& m) {
  if (!is_graph_metric(m)) throw Error(ErrorCode::PreconditionUnmet, "input is not a graph metric");
}

}  // namespace

bool lines_distinct(const std::vector<Line>& lines) {
  std::unordered_set<PointSet, PointSetHash> seen;
  for (const auto& l : lines) {
    if (!seen.insert(l.members).second) return false;
  }
  return true;
}

template <BetweennessSource S>
WitnessReport witness_from_geodesic(const S& s, const std::vector<PointId>& geo) {
  if (geo.size() < 2) throw Error(ErrorCode::PreconditionUnmet, "a geodesic needs at least 2 points");
  if (!is_geodesic_sequence(s, geo)) {
    throw Error(ErrorCode::PreconditionUnmet, "sequence is not geodesic", {geo.begin(), geo.end()});
  }
  const std::size_t k = geo.size();
  return select_best("geodesic", {}, {{"geodesic(" + std::to_string(k) + ")", k, [&] { return geodesic_lines(s, geo); }}},
                     Rational(static_cast<std::int64_t>(k)));
}

template <BetweennessSource S>
WitnessReport witness_pseudometric(const S& s, const WitnessOptions&) {
  require_no_universal_line(s);
  std::vector<Candidate> cands;
  for (PointId a = 0; a < s.size(); ++a) {
    const AnchoredPoset p = anchored_poset(s, a);
    const DilworthResult dr = dilworth_decompose(p, TieBreak::Canonical);
    const std::string prefix = "anchor " + std::to_string(a) + " ";
    std::vector<PointId> geo{a};
    geo.insert(geo.end(), dr.chain.begin(), dr.chain.end());
    cands.push_back({prefix + "chain", geo.size(), [&s, geo] { return geodesic_lines(s, geo); }});
    bucket_candidates(s, a, dr.antichain, prefix + "antichain ", true, cands);
  }
  const std::uint64_t n = s.size();
  return select_best("pseudometric", {}, std::move(cands),
                     Rational(static_cast<std::int64_t>(pseudometric_bound(n))));
}

WitnessReport witness_metric(const MetricSpace& m, const WitnessOptions& opt) {
  require_no_universal_line(m);
  const std::size_t n = m.size();
  const Rational formula(static_cast<std::int64_t>(metric_bound(n)));
  if (n < 4) {
    return select_best("metric", {}, {{"small", binom2(n), [&] {
                                         std::vector<PointId> all;
                                         for (PointId v = 0; v < n; ++v) all.push_back(v);
                                         return pair_lines(m, all);
                                       }}},
                       formula);
  }
  const Diameter dia = diameter(m);
  const auto [a, b] = dia.pair;
  std::vector<PointId> xa, xb, y;
  for (PointId x = 0; x < n; ++x) {
    const bool far_a = 2 * m.dist(a, x) > dia.value;
    const bool far_b = 2 * m.dist(b, x) > dia.value;
    if (far_a) xa.push_back(x);
    if (far_b) xb.push_back(x);
    if (!far_a && !far_b) y.push_back(x);
  }
  const std::uint64_t threshold = opt.threshold.value_or(ceil_nine_tenths_power(n));
  std::vector<std::string> trace{"diameter pair (" + std::to_string(a) + "," + std::to_string(b) + ")",
                                 "threshold " + std::to_string(threshold)};
  std::vector<Candidate> cands;
  for (const auto& [anchor, far, name] : {std::tuple{a, &xa, "X_a"}, std::tuple{b, &xb, "X_b"}}) {
    if (2 * far->size() + threshold <= n) continue;
    const Poset p = anchored_order(m, anchor, *far);
    const DilworthResult dr = dilworth_decompose(p, TieBreak::Canonical);
    std::vector<PointId> geo{anchor};
    geo.insert(geo.end(), dr.chain.begin(), dr.chain.end());
    cands.push_back({std::string(name) + " chain", geo.size(), [&m, geo] { return geodesic_lines(m, geo); }});
    const std::vector<PointId> anti = dr.antichain;
    const PointId anc = anchor;
    cands.push_back({std::string(name) + " antichain", anti.size(), [&m, anti, anc] {
                       std::vector<Line> out;
                       for (PointId v : anti) out.push_back(line(m, anc, v));
                       return out;
                     }});
  }
  bucket_candidates(m, a, y, "Y ", false, cands);
  return select_best("metric", std::move(trace), std::move(cands), formula);
}

WitnessReport witness_bounded_distances(const MetricSpace& m, const WitnessOptions& opt) {
  const std::size_t n = m.size();
  const LineSet lines = all_lines(m, opt.jobs);
  const std::size_t count = opt.assumed_line_count.value_or(lines.size());
  const std::vector<Dist> dists = distance_set(m);
  const std::size_t w = dists.size();
  const Rational formula = bounded_distances_bound(n, w);
  if (5 * w * count >= n) {
    return select_best("bounded-distances", {}, {{"assumption-failed", lines.size(), [&] {
                                                    return entry_lines(m, lines, [](const Edge&) { return true; });
                                                  }}},
                       formula);
  }
  std::vector<std::string> trace{"assumed line count " + std::to_string(count) + " < n/(5w)"};
  std::vector<Candidate> cands;
  const std::vector<Dist> nonzero(dists.begin() + 1, dists.end());
  std::vector<PointId> all;
  for (PointId v = 0; v < n; ++v) all.push_back(v);
  const Dist big = nonzero.back();
  if (nonzero.size() == 1 || (nonzero.size() == 2 && nonzero[1] != 2 * nonzero[0])) {
    cands.push_back({"no-collinear-triple", binom2(n), [&m, all] { return pair_lines(m, all); }});
  } else if (nonzero.size() == 2) {
    const Dist small = nonzero[0];
    PointId star = 0;
    std::size_t star_size = 0;
    for (PointId x = 0; x < n; ++x) {
      const std::size_t sz = sphere(m, x, big).size();
      if (sz > star_size) {
        star = x;
        star_size = sz;
      }
    }
    cands.push_back({"far-star", star_size, [&m, star, big] {
                       std::vector<Line> out;
                       for (PointId z : sphere(m, star, big)) out.push_back(line(m, star, z));
                       return out;
                     }});
    std::vector<PointId> rest = all;
    std::vector<PointId> clique;
    for (bool found = true; found;) {
      found = false;
      for (std::size_t i = 0; i < rest.size() && !found; ++i) {
        for (std::size_t j = i + 1; j < rest.size() && !found; ++j) {
          const PointId x = rest[i], yv = rest[j];
          if (m.dist(x, yv) != big) continue;
          const bool spans = std::all_of(rest.begin(), rest.end(), [&](PointId z) {
            return z == x || z == yv || (m.dist(x, z) == small && m.dist(yv, z) == small);
          });
          if (spans) {
            clique.push_back(x);
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            found = true;
          }
        }
      }
    }
    cands.push_back({"peeled-clique(" + std::to_string(clique.size()) + ")", binom2(clique.size()),
                     [&m, clique] { return pair_lines(m, clique); }});
  } else {
    PointId centre = 0;
    Dist radius = 0;
    std::size_t best = 0;
    for (PointId x = 0; x < n; ++x) {
      for (Dist delta : nonzero) {
        if (2 * delta <= big) continue;
        const std::size_t sz = sphere(m, x, delta).size();
        if (sz > best) {
          best = sz;
          centre = x;
          radius = delta;
        }
      }
    }
    cands.push_back({"far-sphere", best, [&m, centre, radius] {
                       std::vector<Line> out;
                       for (PointId z : sphere(m, centre, radius)) out.push_back(line(m, centre, z));
                       return out;
                     }});
    if (big % 2 == 0) {
      const Dist half = big / 2;
      auto at_half = [&m, half](const Edge& e) { return m.dist(e.first, e.second) == half; };
      std::size_t half_lines = 0;
      std::size_t rich = lines.size();
      std::size_t rich_edges = 0;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& g = lines[i].generators;
        const auto c = static_cast<std::size_t>(std::count_if(g.begin(), g.end(), at_half));
        if (c > 0) ++half_lines;
        if (c > rich_edges) {
          rich_edges = c;
          rich = i;
        }
      }
      cands.push_back({"half-distance-lines", half_lines, [&m, &lines, at_half] { return entry_lines(m, lines, at_half); }});
      if (rich < lines.size()) {
        const Graph core = prune_to_min_degree(generator_graph(m, lines, lines[rich].members, half).graph, 3);
        std::vector<std::vector<PointId>> sides;
        for (const auto& comp : edge_components(core)) {
          std::vector<int> side(n, -1);
          side[comp.front()] = 0;
          std::vector<PointId> queue{comp.front()};
          for (std::size_t i = 0; i < queue.size(); ++i) {
            for (PointId u : core.neighbors(queue[i])) {
              if (side[u] < 0) {
                side[u] = 1 - side[queue[i]];
                queue.push_back(u);
              } else if (side[u] == side[queue[i]]) {
                throw Error(ErrorCode::InternalInconsistency, "odd cycle in H_{D/2}(L)", wide({queue[i], u}));
              }
            }
          }
          std::vector<PointId> s0, s1;
          for (PointId v : comp) (side[v] == 0 ? s0 : s1).push_back(v);
          sides.push_back(s0.size() >= s1.size() ? s0 : s1);
        }
        std::size_t total = 0;
        for (const auto& s : sides) total += binom2(s.size());
        cands.push_back({"three-core-sides(" + std::to_string(sides.size()) + ")", total, [&m, sides] {
                           std::vector<Line> out;
                           for (const auto& s : sides) {
                             auto part = pair_lines(m, s);
                             out.insert(out.end(), part.begin(), part.end());
                           }
                           return out;
                         }});
      }
    }
  }
  return select_best("bounded-distances", std::move(trace), std::move(cands), formula);
}

WitnessReport witness_3metric(const MetricSpace& m, const WitnessOptions& opt) {
  const std::size_t n = m.size();
  if (n < 2) throw Error(ErrorCode::TooFewPoints, "needs at least 2 points");
  const Dist unit = m.scale();
  std::array<std::size_t, 4> pairs{};
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) {
      const Dist d = m.dist(i, j);
      if (d % unit != 0 || d / unit > 3) {
        throw Error(ErrorCode::NotA3Metric, "distance is not an integer in {1,2,3}", wide({i, j}));
      }
      ++pairs[static_cast<std::size_t>(d / unit)];
    }
  }
  std::size_t delta = 1;
  for (std::size_t d = 2; d <= 3; ++d)
    if (pairs[d] > pairs[delta]) delta = d;
  std::vector<std::string> trace{"majority distance " + std::to_string(delta)};
  std::vector<Candidate> cands;
  if (delta == 1) {
    PointId a = 0;
    std::size_t deg = 0;
    for (PointId v = 0; v < n; ++v) {
      const std::size_t dv = sphere(m, v, unit).size();
      if (dv > deg) {
        deg = dv;
        a = v;
      }
    }
    const std::vector<PointId> nbhd = sphere(m, a, unit);
    std::vector<Line> sub;
    if (nbhd.size() >= 2) sub = mapped_subspace_lines(m, nbhd, opt.jobs);
    cands.push_back({"unit-neighbourhood(" + std::to_string(a) + ")", sub.size(), [sub] { return sub; }});
    return select_best("3metric", std::move(trace), std::move(cands), std::nullopt);
  }
  const LineSet lines = all_lines(m, opt.jobs);
  const Dist target = static_cast<Dist>(delta) * unit;
  auto at_target = [&m, target](const Edge& e) { return m.dist(e.first, e.second) == target; };
  std::size_t many = 0;
  std::size_t rich = 0;
  std::size_t rich_edges = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& g = lines[i].generators;
    const auto c = static_cast<std::size_t>(std::count_if(g.begin(), g.end(), at_target));
    if (c > 0) ++many;
    if (c > rich_edges) {
      rich_edges = c;
      rich = i;
    }
  }
  cands.push_back({"many-lines", many, [&m, &lines, at_target] { return entry_lines(m, lines, at_target); }});
  std::vector<Edge> matching;
  std::vector<char> used(n, 0);
  for (const Edge& e : lines[rich].generators) {
    if (at_target(e) && !used[e.first] && !used[e.second]) {
      used[e.first] = used[e.second] = 1;
      matching.push_back(e);
    }
  }
  trace.push_back("rich line matching " + std::to_string(matching.size()));
  if (delta == 2) {
    std::vector<PointId> as;
    for (const auto& e : matching) as.push_back(e.first);
    cands.push_back({"matching-endpoints", binom2(as.size()), [&m, as] { return pair_lines(m, as); }});
  } else {
    cands.push_back({"special-pairs", binom2(matching.size()), [&m, matching, unit] {
                       std::vector<Line> out;
                       for (std::size_t i = 0; i < matching.size(); ++i) {
                         for (std::size_t j = i + 1; j < matching.size(); ++j) {
                           const PointId ai = matching[i].first;
                           const PointId x = m.dist(ai, matching[j].first) == 2 * unit ? matching[j].first
                                                                                       : matching[j].second;
                           out.push_back(line(m, ai, x));
                         }
                       }
                       return out;
                     }});
  }
  return select_best("3metric", std::move(trace), std::move(cands), std::nullopt);
}

WitnessReport witness_graph_alpha(const MetricSpace& m, const std::vector<Edge>& pairs) {
  require_graph_metric(m);
  if (pairs.empty()) throw Error(ErrorCode::PreconditionUnmet, "no pairs given");
  const Dist unit = m.scale();
  const PointSet common = line(m, pairs[0].first, pairs[0].second).members;
  const Dist ell = m.dist(pairs[0].first, pairs[0].second);
  if (ell < 2 * unit) throw Error(ErrorCode::PreconditionUnmet, "common distance must be at least 2");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [x, y] = pairs[i];
    if (!(line(m, x, y).members == common)) {
      throw Error(ErrorCode::PreconditionUnmet, "pairs generate different lines", wide({x, y}));
    }
    if (m.dist(x, y) != ell) throw Error(ErrorCode::PreconditionUnmet, "pairs are at different distances", wide({x, y}));
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!alpha_related(m, pairs[i], pairs[j]) ||
          std::minmax(pairs[i].first, pairs[i].second) == std::minmax(pairs[j].first, pairs[j].second)) {
        throw Error(ErrorCode::PreconditionUnmet, "pairs are not pairwise alpha-related",
                    wide({x, y, pairs[j].first, pairs[j].second}));
      }
    }
  }
  const PointId a1 = pairs[0].first;
  std::map<Dist, std::vector<PointId>> by_distance;  // d(a_1, b_k) -> b_k
  std::size_t in_a = 0;
  for (const auto& [x, y] : pairs) {
    if (m.between(x, a1, y)) continue;
    ++in_a;
    PointId b = y;
    if (y == a1 || (x != a1 && !m.between(a1, x, y))) {
      if (y != a1 && !m.between(a1, y, x)) {
        throw Error(ErrorCode::InternalInconsistency, "alpha-related pair cannot be oriented", wide({a1, x, y}));
      }
      b = x;
    }
    by_distance[m.dist(a1, b)].push_back(b);
  }
  Dist best_d = 0;
  std::vector<PointId> bs;
  for (const auto& [d, v] : by_distance) {
    if (v.size() > bs.size()) {
      best_d = d;
      bs = v;
    }
  }
  std::vector<PointId> sorted = bs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InternalInconsistency, "two pairs in one distance class share b");
  }
  const Dist dia = diameter(m).value / unit;
  const auto q = static_cast<std::int64_t>(pairs.size());
  std::vector<std::string> trace{"oriented pairs " + std::to_string(in_a),
                                 "class d=" + std::to_string(best_d / unit) + " size " + std::to_string(bs.size())};
  return select_best("graph-alpha", std::move(trace),
                     {{"far-endpoints", binom2(bs.size()), [&m, bs] { return pair_lines(m, bs); }}},
                     Rational(q * q, 2 * dia * dia));
}

WitnessReport witness_graph_gamma(const MetricSpace& m, const std::vector<Edge>& pairs) {
  require_graph_metric(m);
  const Dist unit = m.scale();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!gamma_related(m, pairs[i], pairs[j]) ||
          !(line(m, pairs[i].first, pairs[i].second).members == line(m, pairs[j].first, pairs[j].second).members)) {
        throw Error(ErrorCode::NotGammaFamily, "pairs are not pairwise gamma-related on one line",
                    wide({pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second}));
      }
    }
  }
  const auto q = static_cast<std::int64_t>(pairs.size());
  const Rational formula(q * q, 2);
  if (pairs.size() < 2) return select_best("graph-gamma", {}, {{"single-pair", 0, [] { return std::vector<Line>{}; }}}, formula);
  const Dist t = m.dist(pairs[0].first, pairs[0].second);
  std::vector<std::string> trace{"common distance " + std::to_string(t / unit)};
  if (t == 2 * unit) {
    std::vector<PointId> as;
    for (const auto& p : pairs) as.push_back(p.first);
    return select_best("graph-gamma", std::move(trace),
                       {{"distance-two", binom2(as.size()), [&m, as] { return pair_lines(m, as); }}}, formula);
  }
  return select_best("graph-gamma", std::move(trace),
                     {{"special-pairs", binom2(pairs.size()), [&m, pairs, t] {
                         std::vector<Line> out;
                         for (std::size_t i = 0; i < pairs.size(); ++i) {
                           for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                             const PointId ai = pairs[i].first;
                             const PointId x = 2 * m.dist(pairs[j].first, ai) >= t ? pairs[j].first : pairs[j].second;
                             out.push_back(line(m, ai, x));
                           }
                         }
                         return out;
                       }}},
                     formula);
}

WitnessReport witness_graph(const MetricSpace& m, const WitnessOptions& opt) {
  require_graph_metric(m);
  require_no_universal_line(m);
  const std::size_t n = m.size();
  const Dist unit = m.scale();
  const Dist dia = diameter(m).value;
  std::map<Dist, std::size_t> counts;
  for (PointId i = 0; i < n; ++i)
    for (PointId j = i + 1; j < n; ++j) ++counts[m.dist(i, j)];
  Dist d = 0;
  std::size_t most = 0;
  for (const auto& [dist, c] : counts) {
    if (c > most) {
      most = c;
      d = dist;
    }
  }
  std::vector<std::string> trace{"common distance " + std::to_string(d / unit)};
  std::vector<Candidate> cands;
  const std::vector<PointId> geo = longest_geodesic(m);
  cands.push_back({"long-geodesic", geo.size(), [&m, geo] { return geodesic_lines(m, geo); }});
  const LineSet lines = all_lines(m, opt.jobs);
  if (d == unit) {
    PointId v = 0;
    std::size_t deg = 0;
    for (PointId x = 0; x < n; ++x) {
      const std::size_t dx = sphere(m, x, unit).size();
      if (dx > deg) {
        deg = dx;
        v = x;
      }
    }
    const std::vector<PointId> nbhd = sphere(m, v, unit);
    std::vector<Line> sub;
    if (nbhd.size() >= 2) sub = mapped_subspace_lines(m, nbhd, opt.jobs);
    cands.push_back({"neighbourhood(" + std::to_string(v) + ")", sub.size(), [sub] { return sub; }});
  } else {
    auto at_d = [&m, d](const Edge& e) { return m.dist(e.first, e.second) == d; };
    std::size_t many = 0;
    std::size_t rich = 0;
    std::size_t rich_edges = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto& g = lines[i].generators;
      const auto c = static_cast<std::size_t>(std::count_if(g.begin(), g.end(), at_d));
      if (c > 0) ++many;
      if (c > rich_edges) {
        rich_edges = c;
        rich = i;
      }
    }
    cands.push_back({"many-lines", many, [&m, &lines, at_d] { return entry_lines(m, lines, at_d); }});
    const LineEntry& entry = lines[rich];
    const GammaCliqueReport gc = gamma_clique_check(m, lines, entry.members);
    if (!gc.holds) throw Error(ErrorCode::InternalInconsistency, "gamma-pairs of one line are not a clique");
    std::vector<Edge> gammas, alphas;
    for (const Edge& e : entry.generators) {
      if (!at_d(e)) continue;
      if (std::find(gc.gamma_pairs.begin(), gc.gamma_pairs.end(), e) != gc.gamma_pairs.end()) {
        gammas.push_back(e);
      } else {
        alphas.push_back(e);
      }
    }
    trace.push_back("rich line pairs " + std::to_string(rich_edges) + ": gamma " + std::to_string(gammas.size()) +
                    ", other " + std::to_string(alphas.size()));
    try {
      if (!gammas.empty()) {
        WitnessReport g = witness_graph_gamma(m, gammas);
        cands.push_back({"rich-gamma", g.guaranteed_count, [g] { return g.lines; }});
      }
      if (!alphas.empty()) {
        WitnessReport a = witness_graph_alpha(m, alphas);
        cands.push_back({"rich-alpha", a.guaranteed_count, [a] { return a.lines; }});
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::InternalInconsistency, std::string("rich line split failed: ") + e.what());
    }
  }
  return select_best("graph", std::move(trace), std::move(cands),
                     Rational(static_cast<std::int64_t>(diameter_graph_bound(n, static_cast<std::uint64_t>(dia / unit)))));
}

std::uint64_t pseudometric_bound(std::uint64_t n) {
  const Wide n2 = Wide{n} * n;
  return least_satisfying(n, [&](std::uint64_t k) { return 2 * wide_pow(k, 5) >= n2; });
}

std::uint64_t metric_bound(std::uint64_t n) {
  return least_satisfying(n, [&](std::uint64_t k) { return 2 * Wide{k} * k >= n; });
}

std::uint64_t diameter_graph_bound(std::uint64_t n, std::uint64_t d) {
  const Wide n4 = wide_pow(n, 4);
  const Wide d4 = wide_pow(d, 4);
  return least_satisfying(n * n, [&](std::uint64_t k) { return Wide{128} * wide_pow(k, 3) * d4 >= n4; });
}

std::uint64_t graph_bound(std::uint64_t n) {
  const Wide n4 = wide_pow(n, 4);
  return least_satisfying(n, [&](std::uint64_t k) { return wide_pow(2 * k, 7) >= n4; });
}

Rational bounded_distances_bound(std::uint64_t n, std::uint64_t w) {
  return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(5 * w));
}

template WitnessReport witness_from_geodesic(const MetricSpace&, const std::vector<PointId>&);
template WitnessReport witness_from_geodesic(const BetweennessRelation&, const std::vector<PointId>&);
template WitnessReport witness_pseudometric(const MetricSpace&, const WitnessOptions&);
template WitnessReport witness_pseudometric(const BetweennessRelation&, const WitnessOptions&);

}  // namespace mlines

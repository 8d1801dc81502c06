#include "mlines/relations.hpp"

#include <algorithm>

namespace mlines {

namespace {

void require_distinct(const Quad& q) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (q[i] == q[j]) throw Error(ErrorCode::DuplicatePoint, "four distinct points required", {q[0], q[1], q[2], q[3]});
}

void require_disjoint(Edge p, Edge q) {
  if (p.first == p.second || q.first == q.second) {
    throw Error(ErrorCode::DuplicatePoint, "pair repeats a point", {p.first, p.second, q.first, q.second});
  }
  if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) {
    throw Error(ErrorCode::OverlappingPairs, "pairs share a point", {p.first, p.second, q.first, q.second});
  }
}

template <BetweennessSource S>
bool parallelogram_unchecked(const S& s, PointId a, PointId b, PointId c, PointId d) {
  return s.between(a, b, c) && s.between(b, c, d) && s.between(c, d, a) && s.between(d, a, b);
}

template <BetweennessSource S>
bool collinear3(const S& s, PointId a, PointId b, PointId c) {
  return s.between(a, b, c) || s.between(b, c, a) || s.between(c, a, b);
}

template <BetweennessSource S>
bool inner_empty(const S& s, Edge p) {
  for (PointId x = 0; x < s.size(); ++x)
    if (s.between(p.first, x, p.second)) return false;
  return true;
}

template <BetweennessSource S>
bool outer_empty(const S& s, Edge p) {
  for (PointId x = 0; x < s.size(); ++x)
    if (s.between(x, p.first, p.second) || s.between(p.first, p.second, x)) return false;
  return true;
}

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

bool disjoint(Edge p, Edge q) {
  return p.first != q.first && p.first != q.second && p.second != q.first && p.second != q.second;
}

}  // namespace

std::vector<std::string> RelationKinds::names() const {
  std::vector<std::string> out;
  if (alpha) out.emplace_back("alpha");
  if (beta) out.emplace_back("beta");
  if (gamma) out.emplace_back("gamma");
  return out;
}

template <BetweennessSource S>
InnerOuter inner_outer(const S& s, PointId a, PointId b) {
  if (a == b) throw Error(ErrorCode::SamePoint, "I/O sets need two distinct points", {a});
  InnerOuter io{PointSet(s.size()), PointSet(s.size())};
  for (PointId x = 0; x < s.size(); ++x) {
    if (s.between(a, x, b)) io.inner.insert(x);
    if (s.between(x, a, b) || s.between(a, b, x)) io.outer.insert(x);
  }
  return io;
}

template <BetweennessSource S>
bool is_parallelogram(const S& s, const Quad& q) {
  require_distinct(q);
  return parallelogram_unchecked(s, q[0], q[1], q[2], q[3]);
}

template <BetweennessSource S>
bool are_parallel(const S& s, Edge p, Edge q) {
  require_disjoint(p, q);
  const auto [a, b] = p;
  const auto [c, d] = q;
  return parallelogram_unchecked(s, a, b, c, d) || parallelogram_unchecked(s, a, b, d, c);
}

template <BetweennessSource S>
bool are_antipodal(const S& s, Edge p, Edge q) {
  require_disjoint(p, q);
  return parallelogram_unchecked(s, p.first, q.first, p.second, q.second);
}

template <BetweennessSource S>
bool alpha_related(const S& s, Edge p, Edge q) {
  std::vector<PointId> pts{p.first, p.second, q.first, q.second};
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return false;
  return is_geodesic_set(s, pts).has_value();
}

template <BetweennessSource S>
bool beta_related(const S& s, Edge p, Edge q) {
  if (!disjoint(p, q)) return false;
  return are_parallel(s, p, q) && inner_empty(s, p) && inner_empty(s, q);
}

template <BetweennessSource S>
bool gamma_related(const S& s, Edge p, Edge q) {
  if (!disjoint(p, q)) return false;
  return are_antipodal(s, p, q) && outer_empty(s, p) && outer_empty(s, q);
}

template <BetweennessSource S>
RelationKinds classify_pair_relation(const S& s, Edge p, Edge q) {
  p = normalized(p);
  q = normalized(q);
  if (p.first == p.second || q.first == q.second) {
    throw Error(ErrorCode::SamePoint, "pair repeats a point", {p.first, p.second, q.first, q.second});
  }
  if (p == q) throw Error(ErrorCode::IdenticalPairs, "pairs are identical", {p.first, p.second});
  if (!(line(s, p.first, p.second).members == line(s, q.first, q.second).members)) {
    throw Error(ErrorCode::DifferentLines, "pairs generate different lines", {p.first, p.second, q.first, q.second});
  }
  return {alpha_related(s, p, q), beta_related(s, p, q), gamma_related(s, p, q)};
}

template <BetweennessSource S>
LemmaCheck check_center_lemma(const S& s, PointId a, PointId b, PointId c, PointId x) {
  require_distinct({a, b, c, x});
  if (!(s.between(a, x, b) && s.between(b, x, c) && s.between(c, x, a))) {
    throw Error(ErrorCode::HypothesisUnmet, "needs [axb], [bxc] and [cxa]", {a, b, c, x});
  }
  if (collinear3(s, a, b, c)) return {false, {a, b, c, x}};
  return {};
}

template <BetweennessSource S>
GammaCliqueReport gamma_clique_check(const S& s, const LineSet& lines, const PointSet& l) {
  const LineEntry& entry = lines.at(l);
  // A gamma-pair has O empty, a beta-pair has I empty; only those candidates
  // need the pairwise tests.
  std::vector<Edge> no_outer;
  std::vector<Edge> no_inner;
  for (const Edge& e : entry.generators) {
    if (outer_empty(s, e)) no_outer.push_back(e);
    if (inner_empty(s, e)) no_inner.push_back(e);
  }
  GammaCliqueReport report;
  for (std::size_t i = 0; i < no_outer.size(); ++i) {
    for (std::size_t j = 0; j < no_outer.size(); ++j) {
      if (i != j && disjoint(no_outer[i], no_outer[j]) && are_antipodal(s, no_outer[i], no_outer[j])) {
        report.gamma_pairs.push_back(no_outer[i]);
        break;
      }
    }
  }
  // Beta-related pairs generate the same line, so the partner is in E(L) too.
  for (const Edge& g : report.gamma_pairs) {
    if (!inner_empty(s, g)) continue;
    for (const Edge& h : no_inner) {
      if (disjoint(g, h) && are_parallel(s, g, h)) {
        return {false, 'a', report.gamma_pairs, {g.first, g.second, h.first, h.second}};
      }
    }
  }
  const auto& gp = report.gamma_pairs;
  for (std::size_t i = 0; i < gp.size(); ++i) {
    for (std::size_t j = i + 1; j < gp.size(); ++j) {
      if (!disjoint(gp[i], gp[j])) {
        return {false, 'b', gp, {gp[i].first, gp[i].second, gp[j].first, gp[j].second}};
      }
      if (!gamma_related(s, gp[i], gp[j])) {
        return {false, 'c', gp, {gp[i].first, gp[i].second, gp[j].first, gp[j].second}};
      }
    }
  }
  return report;
}

template <BetweennessSource S>
LemmaCheck gamma_no_mid_check(const S& s, const std::array<Edge, 3>& pairs) {
  const auto [a, b] = pairs[0];
  const auto [u, v] = pairs[1];
  const auto [x, y] = pairs[2];
  const std::vector<std::size_t> pts{a, b, u, v, x, y};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!gamma_related(s, pairs[i], pairs[j]) ||
          !(line(s, pairs[i].first, pairs[i].second).members == line(s, pairs[j].first, pairs[j].second).members)) {
        throw Error(ErrorCode::HypothesisUnmet, "pairs are not pairwise gamma-related on one line", pts);
      }
    }
  }
  if (!s.between(a, x, u)) throw Error(ErrorCode::HypothesisUnmet, "needs [a x u]", pts);
  if (collinear3(s, a, y, u)) return {false, {a, b, u, v, x, y}};
  return {};
}

bool parallelogram_metric_iff(const MetricSpace& m, const Quad& q) {
  require_distinct(q);
  const auto [a, b, c, d] = q;
  return m.dist(a, b) == m.dist(c, d) && m.dist(a, d) == m.dist(b, c) && m.dist(a, c) == m.dist(b, d) &&
         m.dist(a, c) == m.dist(a, b) + m.dist(b, c);
}

StructureReport structure_claims_check(const MetricSpace& m, const LineSet& lines, const PointSet& l) {
  StructureReport report;
  const Dist big = m.size() < 2 ? 0 : diameter(m).value;
  if (big % 2 != 0) {
    report.vacuous = true;
    return report;
  }
  const Dist half = big / 2;
  const GeneratorGraph h = generator_graph(m, lines, l, half);
  if (h.graph.edge_count() == 0) {
    report.vacuous = true;
    return report;
  }
  auto fail = [&](bool StructureReport::*flag, std::vector<PointId> pts) {
    report.*flag = false;
    report.counterexample = std::move(pts);
    return report;
  };
  for (const auto& [y, z] : h.graph.edges()) {
    for (const Edge& e : {Edge{y, z}, Edge{z, y}}) {
      l.for_each([&](PointId x) {
        if (!report.parity || x == e.first || x == e.second) return;
        const Dist dx = m.dist(x, e.first);
        if ((dx == big || dx == half) && m.dist(x, e.second) != 3 * half - dx) {
          fail(&StructureReport::parity, {x, e.first, e.second});
        }
      });
      if (!report.parity) return report;
    }
  }
  for (const auto& comp : edge_components(h.graph)) {
    std::vector<int> side(m.size(), -1);
    side[comp.front()] = 0;
    std::vector<PointId> queue{comp.front()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (PointId u : h.graph.neighbors(queue[i])) {
        if (side[u] < 0) {
          side[u] = 1 - side[queue[i]];
          queue.push_back(u);
        } else if (side[u] == side[queue[i]]) {
          return fail(&StructureReport::bipartite, {queue[i], u});
        }
      }
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        const Dist want = side[comp[i]] == side[comp[j]] ? big : half;
        if (m.dist(comp[i], comp[j]) != want) return fail(&StructureReport::bipartite, {comp[i], comp[j]});
      }
    }
  }
  const Graph core = prune_to_min_degree(h.graph, 2);
  std::vector<PointId> core_vertices;
  for (PointId v = 0; v < core.size(); ++v)
    if (core.degree(v) > 0) core_vertices.push_back(v);
  for (std::size_t i = 0; i < core_vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < core_vertices.size(); ++j) {
      const Dist d = m.dist(core_vertices[i], core_vertices[j]);
      if (d != half && d != big) return fail(&StructureReport::rigidity, {core_vertices[i], core_vertices[j]});
    }
  }
  return report;
}

#define MLINES_INSTANTIATE(S)                                                                    \
  template InnerOuter inner_outer(const S&, PointId, PointId);                                   \
  template bool is_parallelogram(const S&, const Quad&);                                         \
  template bool are_parallel(const S&, Edge, Edge);                                              \
  template bool are_antipodal(const S&, Edge, Edge);                                             \
  template bool alpha_related(const S&, Edge, Edge);                                             \
  template bool beta_related(const S&, Edge, Edge);                                              \
  template bool gamma_related(const S&, Edge, Edge);                                             \
  template RelationKinds classify_pair_relation(const S&, Edge, Edge);                           \
  template LemmaCheck check_center_lemma(const S&, PointId, PointId, PointId, PointId);          \
  template GammaCliqueReport gamma_clique_check(const S&, const LineSet&, const PointSet&);      \
  template LemmaCheck gamma_no_mid_check(const S&, const std::array<Edge, 3>&);

MLINES_INSTANTIATE(MetricSpace)
MLINES_INSTANTIATE(BetweennessRelation)

}  // namespace mlines

#include "mlines/lines.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "mlines/exact.hpp"

namespace mlines {

namespace {

std::vector<std::size_t> as_points(const PointSet& s) {
  std::vector<std::size_t> out;
  s.for_each([&](PointId p) { out.push_back(p); });
  return out;
}

}  // namespace

LineSet::LineSet(std::size_t universe, std::vector<LineEntry> entries)
    : universe_(universe), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const LineEntry& x, const LineEntry& y) { return x.members < y.members; });
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].members, i);
}

std::optional<std::size_t> LineSet::find(const PointSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const LineEntry& LineSet::at(const PointSet& members) const {
  auto i = find(members);
  if (!i) throw Error(ErrorCode::UnknownLine, "not a line of this space", as_points(members));
  return entries_[*i];
}

template <BetweennessSource S>
Line line(const S& s, PointId a, PointId b) {
  const std::size_t n = s.size();
  if (a >= n || b >= n) throw Error(ErrorCode::PointOutOfRange, "generator out of range", {a, b});
  if (a == b) throw Error(ErrorCode::SamePoint, "a line needs two distinct points", {a});
  PointSet members(n);
  members.insert(a);
  members.insert(b);
  for (PointId c = 0; c < n; ++c) {
    if (s.between(a, b, c) || s.between(a, c, b) || s.between(c, a, b)) members.insert(c);
  }
  return {std::move(members), {std::min(a, b), std::max(a, b)}};
}

template <BetweennessSource S>
LineSet all_lines(const S& s, std::size_t jobs) {
  const std::size_t n = s.size();
  if (n < 2) throw Error(ErrorCode::TooFewPoints, "lines need at least 2 points");
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  std::vector<LineEntry> entries;
  // Rows are computed in blocks so memory stays bounded for large n, then
  // merged in row-major order.
  const std::size_t block = std::max<std::size_t>(jobs * 4, 16);
  std::vector<std::vector<PointSet>> rows(block);
  for (std::size_t first = 0; first + 1 < n; first += block) {
    const std::size_t last = std::min(n - 1, first + block);
    auto work = [&](std::size_t t) {
      for (std::size_t a = first + t; a < last; a += jobs) {
        auto& row = rows[a - first];
        row.clear();
        for (PointId b = static_cast<PointId>(a) + 1; b < n; ++b) {
          row.push_back(line(s, static_cast<PointId>(a), b).members);
        }
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (std::size_t a = first; a < last; ++a) {
      auto& row = rows[a - first];
      for (std::size_t k = 0; k < row.size(); ++k) {
        const Edge e{static_cast<PointId>(a), static_cast<PointId>(a + 1 + k)};
        auto [it, inserted] = index.try_emplace(row[k], entries.size());
        if (inserted) entries.push_back({row[k], {}});
        entries[it->second].generators.push_back(e);
      }
    }
  }
  std::size_t total = 0;
  for (const auto& e : entries) total += e.generators.size();
  if (total != binom2(n)) {
    throw Error(ErrorCode::InternalInconsistency, "generator sets do not partition the pairs");
  }
  return LineSet(n, std::move(entries));
}

template <BetweennessSource S>
std::optional<Line> universal_line(const S& s) {
  const std::size_t n = s.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      Line l = line(s, a, b);
      if (l.members.count() == n) return l;
    }
  }
  return std::nullopt;
}

template Line line(const MetricSpace&, PointId, PointId);
template Line line(const BetweennessRelation&, PointId, PointId);
template LineSet all_lines(const MetricSpace&, std::size_t);
template LineSet all_lines(const BetweennessRelation&, std::size_t);
template std::optional<Line> universal_line(const MetricSpace&);
template std::optional<Line> universal_line(const BetweennessRelation&);

GeneratorGraph generator_graph(const MetricSpace& m, const LineSet& lines, const PointSet& l,
                               std::optional<Dist> delta) {
  const LineEntry& entry = lines.at(l);
  GeneratorGraph g{l, delta, Graph(m.size())};
  for (const auto& [a, b] : entry.generators) {
    if (!delta || m.dist(a, b) == *delta) g.graph.add_edge(a, b);
  }
  return g;
}

GeneratorGraph generator_graph(const BetweennessRelation& b, const LineSet& lines, const PointSet& l,
                               std::optional<Dist> delta) {
  if (delta) throw Error(ErrorCode::NoDistances, "a betweenness relation has no distances");
  const LineEntry& entry = lines.at(l);
  GeneratorGraph g{l, std::nullopt, Graph(b.size())};
  for (const auto& [x, y] : entry.generators) g.graph.add_edge(x, y);
  return g;
}

GeneratorGraph prune_to_min_degree(const GeneratorGraph& g, std::size_t k) {
  return {g.line, g.delta, prune_to_min_degree(g.graph, k)};
}

LemmaCheck check_no_high_degree(const MetricSpace& m, const LineSet& lines, const PointSet& l, Dist delta) {
  const Dist d = m.size() < 2 ? 0 : diameter(m).value;
  if (2 * delta <= d) {
    throw Error(ErrorCode::PreconditionUnmet, "needs 2*delta > diameter (" + std::to_string(delta) + ", " +
                                                  std::to_string(d) + ")");
  }
  const GeneratorGraph g = generator_graph(m, lines, l, delta);
  for (PointId v = 0; v < g.graph.size(); ++v) {
    if (g.graph.degree(v) > 1) {
      const auto& nb = g.graph.neighbors(v);
      return {false, {v, nb[0], nb[1]}};
    }
  }
  return {};
}

}  // namespace mlines

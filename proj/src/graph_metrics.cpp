#include "mlines/graph_metrics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "mlines/exact.hpp"

namespace mlines {

namespace {

Error bad_graph6(std::size_t pos, const std::string& what) {
  return Error(ErrorCode::MalformedGraph6, what + " at byte " + std::to_string(pos), {pos});
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) offset = header.size();
  std::string_view body = text.substr(offset);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= body.size()) throw bad_graph6(offset + i, "unexpected end of record");
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw bad_graph6(offset + i, "byte outside 63..126");
    return c - 63U;
  };
  std::uint64_t n = 0;
  if (body.empty()) throw bad_graph6(offset, "empty record");
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else if (body.size() > 1 && byte(1) < 63) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte(i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > kDefaultMaxPoints) throw bad_graph6(offset, "vertex count " + std::to_string(n) + " too large");
  const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (body.size() != pos + bytes) {
    throw bad_graph6(offset + std::min(body.size(), pos + bytes), "record length does not match vertex count");
  }
  Graph g(n);
  std::size_t k = 0;
  for (PointId j = 1; j < n; ++j) {
    for (PointId i = 0; i < j; ++i, ++k) {
      const std::uint64_t chunk = byte(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::uint64_t last = byte(pos + bytes - 1);
    if (last & ((1U << (6 - bits % 6)) - 1)) throw bad_graph6(offset + pos + bytes - 1, "nonzero padding");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.size();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (PointId j = 1; j < n; ++j) {
    for (PointId i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text, std::size_t n) {
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t max_index = 0;
  bool any = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view row = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    std::vector<std::uint64_t> nums;
    std::size_t i = 0;
    while (i < row.size()) {
      if (row[i] == ' ' || row[i] == '\t' || row[i] == '\r' || row[i] == ',') {
        ++i;
        continue;
      }
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(row.data() + i, row.data() + row.size(), v);
      if (ec != std::errc{}) {
        throw Error(ErrorCode::MalformedInput, "edge list line " + std::to_string(line_no) + ": expected integer",
                    {line_no});
      }
      nums.push_back(v);
      i = static_cast<std::size_t>(ptr - row.data());
    }
    if (nums.empty()) continue;
    if (nums.size() != 2) {
      throw Error(ErrorCode::MalformedInput, "edge list line " + std::to_string(line_no) + ": expected two vertices",
                  {line_no});
    }
    if (nums[0] >= kDefaultMaxPoints || nums[1] >= kDefaultMaxPoints) {
      throw Error(ErrorCode::NTooLarge, "edge list vertex index too large", {line_no});
    }
    edges.emplace_back(static_cast<PointId>(nums[0]), static_cast<PointId>(nums[1]));
    max_index = std::max<std::size_t>({max_index, nums[0], nums[1]});
    any = true;
  }
  if (n == 0) n = any ? max_index + 1 : 0;
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

MetricSpace graph_metric(const Graph& g) {
  const std::size_t n = g.size();
  DistMatrix d(n, std::vector<Dist>(n, -1));
  std::vector<PointId> queue(n);
  for (PointId s = 0; s < n; ++s) {
    auto& row = d[s];
    row[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const PointId v = queue[head++];
      for (PointId u : g.neighbors(v)) {
        if (row[u] < 0) {
          row[u] = row[v] + 1;
          queue[tail++] = u;
        }
      }
    }
    if (tail != n) {
      for (PointId v = 0; v < n; ++v) {
        if (row[v] < 0) {
          const PointId from = 0;
          throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " unreachable from 0", {from, v});
        }
      }
    }
  }
  return validate_metric(d, 1);
}

std::vector<std::size_t> kpartite_part_sizes(std::size_t n) {
  if (n < 4) throw Error(ErrorCode::NTooSmall, "complete k-partite family needs n >= 4");
  const std::size_t k = floor_two_thirds_power(n);
  std::vector<std::size_t> parts(k, n / k);
  for (std::size_t i = 0; i < n % k; ++i) ++parts[i];
  return parts;
}

Graph gen_complete_kpartite(std::size_t n) {
  const auto parts = kpartite_part_sizes(n);
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  Graph g(n);
  for (PointId u = 0; u < n; ++u)
    for (PointId v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

std::size_t subdivided_path_vertex_count(std::size_t s, std::size_t detour_length) {
  if (s < 2) throw Error(ErrorCode::STooSmall, "subdivided path needs s >= 2");
  if (detour_length == 0) detour_length = s + 1;
  return s * s * s + 1 + s * s * (detour_length - 1);
}

Graph gen_subdivided_path(std::size_t s, std::size_t detour_length) {
  if (s < 2) throw Error(ErrorCode::STooSmall, "subdivided path needs s >= 2");
  if (detour_length == 0) detour_length = s + 1;
  if (detour_length < 2) throw Error(ErrorCode::PreconditionUnmet, "detours need length >= 2");
  const std::size_t n = subdivided_path_vertex_count(s, detour_length);
  if (n > kDefaultMaxPoints) throw Error(ErrorCode::NTooLarge, "subdivided path too large");
  Graph g(n);
  const std::size_t spine = s * s * s;
  for (PointId v = 0; v < spine; ++v) g.add_edge(v, v + 1);
  PointId next = static_cast<PointId>(spine + 1);
  for (std::size_t j = 0; j < s * s; ++j) {
    PointId prev = static_cast<PointId>(j * s);
    for (std::size_t k = 1; k < detour_length; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, static_cast<PointId>(j * s + s));
  }
  return g;
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "cycle needs n >= 3");
  Graph g = gen_path(n);
  g.add_edge(0, static_cast<PointId>(n - 1));
  return g;
}

Graph gen_path(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "path needs n >= 2");
  Graph g(n);
  for (PointId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph gen_complete(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "complete graph needs n >= 2");
  Graph g(n);
  for (PointId u = 0; u < n; ++u)
    for (PointId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

PointId walk_intermediate_point(const Graph& g, const MetricSpace& m, const std::vector<PointId>& walk) {
  if (walk.size() < 2) throw Error(ErrorCode::PreconditionUnmet, "walk needs two endpoints");
  for (PointId v : walk) {
    if (v >= g.size() || v >= m.size()) throw Error(ErrorCode::PointOutOfRange, "walk vertex out of range", {v});
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!g.has_edge(walk[i], walk[i + 1])) {
      throw Error(ErrorCode::PreconditionUnmet, "consecutive walk vertices are not adjacent", {walk[i], walk[i + 1]});
    }
  }
  const PointId a = walk.front();
  const PointId b = walk.back();
  if (a == b || m.dist(a, b) < 2 * m.scale()) {
    throw Error(ErrorCode::PreconditionUnmet, "walk endpoints must be at distance >= 2", {a, b});
  }
  std::vector<char> on_walk(g.size(), 0);
  for (PointId v : walk) on_walk[v] = 1;
  std::vector<PointId> parent(g.size(), static_cast<PointId>(g.size()));
  std::vector<PointId> queue{a};
  parent[a] = a;
  for (std::size_t head = 0; head < queue.size() && parent[b] == g.size(); ++head) {
    for (PointId u : g.neighbors(queue[head])) {
      if (on_walk[u] && parent[u] == g.size()) {
        parent[u] = queue[head];
        queue.push_back(u);
      }
    }
  }
  std::vector<PointId> path;
  for (PointId v = parent[b]; v != a; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  for (PointId u : path) {
    if (!m.between(u, a, b) && !m.between(a, b, u)) return u;
  }
  throw Error(ErrorCode::InternalInconsistency, "no interior walk vertex outside O(a,b)", {a, b});
}

namespace {

using Rows = std::array<std::uint16_t, 16>;

std::uint64_t code_of(const Rows& adj, const std::vector<int>& label, std::size_t n) {
  // position[new] = old; build the code in graph6 bit order, most significant first.
  std::vector<int> old(n);
  for (std::size_t v = 0; v < n; ++v) old[label[v]] = static_cast<int>(v);
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | ((adj[old[i]] >> old[j]) & 1U);
  }
  return code;
}

std::uint64_t canonical_rows(const Rows& adj, std::size_t n) {
  if (n <= 1) return 0;
  std::vector<std::size_t> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<std::size_t>(std::popcount(adj[v]));
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<std::size_t> nb;
      for (std::size_t u = 0; u < n; ++u)
        if ((adj[v] >> u) & 1U) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<std::size_t>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v) {
      color[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  std::vector<std::vector<int>> cells(classes);
  for (std::size_t v = 0; v < n; ++v) cells[color[v]].push_back(static_cast<int>(v));
  std::vector<int> label(n);
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t, int)> place = [&](std::size_t c, int base) {
    if (c == cells.size()) {
      best = std::min(best, code_of(adj, label, n));
      return;
    }
    auto& cell = cells[c];
    std::sort(cell.begin(), cell.end());
    do {
      for (std::size_t k = 0; k < cell.size(); ++k) label[cell[k]] = base + static_cast<int>(k);
      place(c + 1, base + static_cast<int>(cell.size()));
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  place(0, 0);
  return best;
}

Rows rows_of(const Graph& g) {
  Rows adj{};
  for (PointId v = 0; v < g.size(); ++v)
    for (PointId u : g.neighbors(v)) adj[v] |= static_cast<std::uint16_t>(1U << u);
  return adj;
}

Graph graph_from_code(std::uint64_t code, std::size_t n) {
  Graph g(n);
  std::size_t k = n < 2 ? 0 : n * (n - 1) / 2;
  for (PointId j = 1; j < n; ++j) {
    for (PointId i = 0; i < j; ++i) {
      --k;
      if ((code >> k) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.size() > 11) throw Error(ErrorCode::NTooLarge, "canonical codes support at most 11 vertices");
  return canonical_rows(rows_of(g), g.size());
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::NTooSmall, "need at least one vertex");
  if (n > 10) throw Error(ErrorCode::NTooLarge, "enumeration supports n <= 10");
  std::vector<std::uint64_t> level{0};
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Rows base = rows_of(graph_from_code(code, m - 1));
      for (std::uint32_t mask = 1; mask < (1U << (m - 1)); ++mask) {
        Rows adj = base;
        for (std::size_t v = 0; v + 1 < m; ++v) {
          if ((mask >> v) & 1U) adj[v] |= static_cast<std::uint16_t>(1U << (m - 1));
        }
        adj[m - 1] = static_cast<std::uint16_t>(mask);
        next.insert(canonical_rows(adj, m));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(code, n));
  return out;
}

}  // namespace mlines

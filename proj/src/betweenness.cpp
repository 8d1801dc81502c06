#include "mlines/betweenness.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mlines {

namespace {

std::string points_text(const std::vector<PointId>& pts) {
  std::string s = "(";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pts[i]);
  }
  return s + ")";
}

std::vector<std::size_t> widen(const std::vector<PointId>& pts) { return {pts.begin(), pts.end()}; }

}  // namespace

RelationBuilder::RelationBuilder(std::size_t n) {
  if (n > kMaxRelationPoints) {
    throw Error(ErrorCode::NTooLarge, "relation on " + std::to_string(n) + " points exceeds limit " +
                                          std::to_string(kMaxRelationPoints));
  }
  rel_.n_ = n;
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  rel_.bits_.assign((pairs * n + 63) / 64, 0);
}

void RelationBuilder::add(PointId a, PointId b, PointId c) {
  const std::size_t bit = rel_.pair_index(a, c) * rel_.n_ + b;
  auto& word = rel_.bits_[bit >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (bit & 63);
  if ((word & mask) == 0) {
    word |= mask;
    ++rel_.orbits_;
  }
}

void RelationBuilder::remove(PointId a, PointId b, PointId c) {
  const std::size_t bit = rel_.pair_index(a, c) * rel_.n_ + b;
  auto& word = rel_.bits_[bit >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (bit & 63);
  if ((word & mask) != 0) {
    word &= ~mask;
    --rel_.orbits_;
  }
}

std::vector<Triple> BetweennessRelation::triples() const {
  std::vector<Triple> out;
  out.reserve(orbits_);
  for (PointId a = 0; a < n_; ++a) {
    for (PointId b = 0; b < n_; ++b) {
      for (PointId c = a + 1; c < n_; ++c) {
        if (between(a, b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

BetweennessRelation validate_axioms(const std::vector<Triple>& raw, std::size_t n) {
  RelationBuilder builder(n);
  for (const auto& t : raw) {
    for (PointId p : t) {
      if (p >= n) throw Error(ErrorCode::PointOutOfRange, "triple point " + std::to_string(p) + " >= n", {p});
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(ErrorCode::M0Violation, "triple " + points_text({t[0], t[1], t[2]}) + " repeats a point",
                  {t[0], t[1], t[2]});
    }
    builder.add(t[0], t[1], t[2]);
  }
  const BetweennessRelation& rel = builder.view();
  const auto orbits = rel.triples();
  for (const auto& [a, b, c] : orbits) {
    for (const Triple& o : {Triple{a, b, c}, Triple{c, b, a}}) {
      if (rel.between(o[1], o[0], o[2])) {
        throw Error(ErrorCode::M2Violation, "both [abc] and [bac] at " + points_text({o[0], o[1], o[2]}),
                    {o[0], o[1], o[2]});
      }
    }
  }
  for (const auto& [a0, b0, c0] : orbits) {
    for (const Triple& o : {Triple{a0, b0, c0}, Triple{c0, b0, a0}}) {
      const auto [a, b, c] = o;
      for (PointId d = 0; d < n; ++d) {
        if (rel.between(a, c, d) && !(rel.between(a, b, d) && rel.between(b, c, d))) {
          throw Error(ErrorCode::M3Violation,
                      "[abc] and [acd] without [abd] and [bcd] at " + points_text({a, b, c, d}), {a, b, c, d});
        }
      }
    }
  }
  return std::move(builder).finish();
}

BetweennessRelation induced_betweenness(const MetricSpace& m) {
  const std::size_t n = m.size();
  RelationBuilder builder(n);
  for (PointId a = 0; a < n; ++a) {
    for (PointId c = a + 1; c < n; ++c) {
      for (PointId b = 0; b < n; ++b) {
        if (m.between(a, b, c)) builder.add(a, b, c);
      }
    }
  }
  return std::move(builder).finish();
}

template <BetweennessSource S>
bool is_geodesic_sequence(const S& s, const std::vector<PointId>& seq) {
  std::vector<PointId> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DuplicateInSequence, "sequence repeats a point " + points_text(seq), widen(seq));
  }
  for (PointId p : seq) {
    if (p >= s.size()) throw Error(ErrorCode::PointOutOfRange, "sequence point out of range", {p});
  }
  const std::size_t k = seq.size();
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t t = r + 2; t < k; ++t) {
      for (std::size_t m = r + 1; m < t; ++m) {
        if (!s.between(seq[r], seq[m], seq[t])) return false;
      }
    }
  }
  return true;
}

template <BetweennessSource S>
std::optional<std::vector<PointId>> is_geodesic_set(const S& s, const std::vector<PointId>& points) {
  std::vector<PointId> pts = points;
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw Error(ErrorCode::DuplicatePoint, "set repeats a point", widen(points));
  }
  if (pts.size() < 3) return pts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const PointId x = pts[i];
      const PointId y = pts[j];
      std::vector<PointId> inner;
      bool all_between = true;
      for (PointId z : pts) {
        if (z == x || z == y) continue;
        if (!s.between(x, z, y)) {
          all_between = false;
          break;
        }
        inner.push_back(z);
      }
      if (!all_between) continue;
      // On a geodesic from x, [x z z'] orders the interior; sort by the number
      // of interior points preceding each one.
      std::vector<std::pair<std::size_t, PointId>> keyed;
      for (PointId z : inner) {
        std::size_t before = 0;
        for (PointId z2 : inner) {
          if (z2 != z && s.between(x, z2, z)) ++before;
        }
        keyed.emplace_back(before, z);
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<PointId> order{x};
      for (const auto& kv : keyed) order.push_back(kv.second);
      order.push_back(y);
      if (is_geodesic_sequence(s, order)) return order;
    }
  }
  return std::nullopt;
}

template <BetweennessSource S>
std::vector<PointId> longest_geodesic(const S& s) {
  const std::size_t n = s.size();
  if (n < 2) return n == 1 ? std::vector<PointId>{0} : std::vector<PointId>{};
  std::vector<PointId> best{0, 1};
  std::vector<std::size_t> below(n);
  std::vector<std::size_t> len(n);
  std::vector<PointId> pred(n);
  std::vector<PointId> order(n);
  for (PointId a = 0; a < n; ++a) {
    // Chains of the anchored order x < y iff [a x y]; the count of elements
    // below x is a linear extension because the order is transitive.
    for (PointId x = 0; x < n; ++x) {
      below[x] = 0;
      if (x == a) continue;
      for (PointId y = 0; y < n; ++y) {
        if (y != a && s.between(a, y, x)) ++below[x];
      }
    }
    std::iota(order.begin(), order.end(), PointId{0});
    std::stable_sort(order.begin(), order.end(), [&](PointId u, PointId v) { return below[u] < below[v]; });
    std::size_t top_len = 0;
    PointId top = a;
    for (PointId x : order) {
      if (x == a) continue;
      len[x] = 1;
      pred[x] = a;
      for (PointId y : order) {
        if (below[y] >= below[x]) break;
        if (y != a && s.between(a, y, x) && len[y] + 1 > len[x]) {
          len[x] = len[y] + 1;
          pred[x] = y;
        }
      }
      if (len[x] > top_len || (len[x] == top_len && x < top)) {
        top_len = len[x];
        top = x;
      }
    }
    if (top_len + 1 > best.size()) {
      std::vector<PointId> seq;
      for (PointId x = top; x != a; x = pred[x]) seq.push_back(x);
      seq.push_back(a);
      std::reverse(seq.begin(), seq.end());
      best = std::move(seq);
    }
  }
  return best;
}

template bool is_geodesic_sequence(const MetricSpace&, const std::vector<PointId>&);
template bool is_geodesic_sequence(const BetweennessRelation&, const std::vector<PointId>&);
template std::optional<std::vector<PointId>> is_geodesic_set(const MetricSpace&, const std::vector<PointId>&);
template std::optional<std::vector<PointId>> is_geodesic_set(const BetweennessRelation&,
                                                             const std::vector<PointId>&);
template std::vector<PointId> longest_geodesic(const MetricSpace&);
template std::vector<PointId> longest_geodesic(const BetweennessRelation&);

namespace {

bool geodesic4(const BetweennessRelation& r, PointId a, PointId b, PointId c, PointId d) {
  return r.between(a, b, c) && r.between(a, b, d) && r.between(a, c, d) && r.between(b, c, d);
}

struct GeodesicWalker {
  const BetweennessRelation& rel;
  std::size_t max_len;
  FactCheck result;
  std::vector<PointId> seq;
  std::vector<bool> used;

  void extend() {
    if (!result.holds) return;
    if (seq.size() >= 4) check_deletions();
    if (seq.size() == max_len) return;
    for (PointId p = 0; p < rel.size() && result.holds; ++p) {
      if (used[p]) continue;
      bool ok = true;
      for (std::size_t r = 0; ok && r < seq.size(); ++r) {
        for (std::size_t t = r + 1; ok && t < seq.size(); ++t) ok = rel.between(seq[r], seq[t], p);
      }
      if (!ok) continue;
      used[p] = true;
      seq.push_back(p);
      extend();
      seq.pop_back();
      used[p] = false;
    }
  }

  void check_deletions() {
    for (std::size_t skip = 0; skip < seq.size(); ++skip) {
      std::vector<PointId> sub;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i != skip) sub.push_back(seq[i]);
      }
      if (!is_geodesic_sequence(rel, sub)) {
        result = {false, 'c', seq};
        return;
      }
    }
  }
};

}  // namespace

FactCheck fact_consequences(const BetweennessRelation& r, std::size_t max_sequence_length) {
  const std::size_t n = r.size();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      for (PointId c = 0; c < n; ++c) {
        if (!r.between(a, b, c)) continue;
        for (PointId d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (r.between(a, c, d) && !geodesic4(r, a, b, c, d)) return {false, 'a', {a, b, c, d}};
        }
      }
    }
  }
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      for (PointId d = 0; d < n; ++d) {
        if (!r.between(a, b, d)) continue;
        for (PointId c = 0; c < n; ++c) {
          if (c == a || c == b || c == d) continue;
          if (r.between(b, c, d) && !geodesic4(r, a, b, c, d)) return {false, 'b', {a, b, c, d}};
        }
      }
    }
  }
  GeodesicWalker walker{r, std::max<std::size_t>(max_sequence_length, 1), {}, {}, std::vector<bool>(n, false)};
  for (PointId p = 0; p < n && walker.result.holds; ++p) {
    walker.used[p] = true;
    walker.seq = {p};
    walker.extend();
    walker.used[p] = false;
  }
  return walker.result;
}

namespace {

// M3 restricted to one 4-point set: every ordered choice of (a,b,c,d).
bool m3_holds_on(const BetweennessRelation& r, const std::array<PointId, 4>& quad) {
  std::array<PointId, 4> p = quad;
  std::sort(p.begin(), p.end());
  do {
    const auto [a, b, c, d] = p;
    if (r.between(a, b, c) && r.between(a, c, d) && !(r.between(a, b, d) && r.between(b, c, d))) return false;
  } while (std::next_permutation(p.begin(), p.end()));
  return true;
}

}  // namespace

void for_each_pseudometric_betweenness(std::size_t n,
                                       const std::function<void(const BetweennessRelation&)>& emit) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "enumeration needs n >= 2");
  if (n > 5) throw Error(ErrorCode::NTooLarge, "enumeration supports n <= 5");
  std::vector<Triple> sets;
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = b + 1; c < n; ++c) sets.push_back({a, b, c});
  // For each 3-set, the 4-sets whose other three 3-subsets all come earlier.
  std::vector<std::vector<std::array<PointId, 4>>> closing(sets.size());
  auto index_of = [&](Triple t) {
    std::sort(t.begin(), t.end());
    return static_cast<std::size_t>(std::find(sets.begin(), sets.end(), t) - sets.begin());
  };
  for (PointId a = 0; a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = b + 1; c < n; ++c)
        for (PointId d = c + 1; d < n; ++d) {
          const std::size_t last = std::max({index_of({a, b, c}), index_of({a, b, d}), index_of({a, c, d}),
                                             index_of({b, c, d})});
          closing[last].push_back({a, b, c, d});
        }

  RelationBuilder builder(n);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == sets.size()) {
      emit(builder.view());
      return;
    }
    const auto [x, y, z] = sets[i];
    auto closes_ok = [&] {
      return std::all_of(closing[i].begin(), closing[i].end(),
                         [&](const auto& quad) { return m3_holds_on(builder.view(), quad); });
    };
    // no middle, then middle x, y, z
    if (closes_ok()) assign(i + 1);
    const std::array<Triple, 3> choices{Triple{y, x, z}, Triple{x, y, z}, Triple{x, z, y}};
    for (const auto& t : choices) {
      builder.add(t[0], t[1], t[2]);
      if (closes_ok()) assign(i + 1);
      builder.remove(t[0], t[1], t[2]);
    }
  };
  assign(0);
}

std::vector<BetweennessRelation> enumerate_pseudometric_betweennesses(std::size_t n) {
  std::vector<BetweennessRelation> out;
  for_each_pseudometric_betweenness(n, [&](const BetweennessRelation& r) { out.push_back(r); });
  return out;
}

}  // namespace mlines

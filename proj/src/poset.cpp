#include "mlines/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mlines/exact.hpp"

namespace mlines {

Poset Poset::from_relation(std::vector<PointId> labels, const std::function<bool(PointId, PointId)>& less) {
  std::sort(labels.begin(), labels.end());
  Poset p;
  const std::size_t m = labels.size();
  p.labels_ = std::move(labels);
  p.up_.assign(m, PointSet(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (less(p.labels_[i], p.labels_[j])) {
        if (i == j) {
          throw Error(ErrorCode::InternalInconsistency, "order is not irreflexive at " +
                                                            std::to_string(p.labels_[i]), {p.labels_[i]});
        }
        p.up_[i].insert(static_cast<PointId>(j));
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    p.up_[i].for_each([&](PointId j) {
      if (p.up_[j].contains(static_cast<PointId>(i))) {
        throw Error(ErrorCode::InternalInconsistency, "order is not antisymmetric",
                    {p.labels_[i], p.labels_[j]});
      }
      if (!p.up_[j].is_subset_of(p.up_[i])) {
        throw Error(ErrorCode::InternalInconsistency, "order is not transitive", {p.labels_[i], p.labels_[j]});
      }
    });
  }
  return p;
}

template <BetweennessSource S>
Poset anchored_order(const S& s, PointId a, const std::vector<PointId>& ground) {
  return Poset::from_relation(ground, [&](PointId x, PointId y) { return s.between(a, x, y); });
}

template <BetweennessSource S>
AnchoredPoset anchored_poset(const S& s, PointId a) {
  if (a >= s.size()) throw Error(ErrorCode::PointOutOfRange, "anchor out of range", {a});
  std::vector<PointId> ground;
  for (PointId x = 0; x < s.size(); ++x) {
    if (x != a) ground.push_back(x);
  }
  return {a, anchored_order(s, a, ground)};
}

template Poset anchored_order(const MetricSpace&, PointId, const std::vector<PointId>&);
template Poset anchored_order(const BetweennessRelation&, PointId, const std::vector<PointId>&);
template AnchoredPoset anchored_poset(const MetricSpace&, PointId);
template AnchoredPoset anchored_poset(const BetweennessRelation&, PointId);

namespace {

// Elements sorted so every element comes after all elements below it.
std::vector<std::size_t> linear_extension(const Poset& p, std::vector<std::size_t> elements) {
  std::vector<std::size_t> below(p.size(), 0);
  for (std::size_t i : elements)
    for (std::size_t j : elements)
      if (p.less(j, i)) ++below[i];
  std::stable_sort(elements.begin(), elements.end(),
                   [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
  return elements;
}

// Longest chain; among equal lengths the DP keeps the smallest predecessor
// index and the smallest top index.
std::vector<std::size_t> longest_chain(const Poset& p, const std::vector<std::size_t>& elements) {
  if (elements.empty()) return {};
  const auto order = linear_extension(p, elements);
  std::vector<std::size_t> len(p.size(), 0);
  std::vector<std::size_t> pred(p.size(), p.size());
  std::size_t best = order.front();
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t x = order[k];
    len[x] = 1;
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t y = order[t];
      if (p.less(y, x) && (len[y] + 1 > len[x] || (len[y] + 1 == len[x] && y < pred[x]))) {
        len[x] = len[y] + 1;
        pred[x] = y;
      }
    }
    if (len[x] > len[best] || (len[x] == len[best] && x < best)) best = x;
  }
  std::vector<std::size_t> chain;
  for (std::size_t x = best; x != p.size(); x = pred[x]) chain.push_back(x);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

struct Matching {
  std::vector<std::size_t> match_left;   // element -> right partner or npos
  std::vector<std::size_t> match_right;  // element -> left partner or npos
  std::size_t size = 0;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Maximum matching in the bipartite graph left x -- right y for x < y.
Matching comparability_matching(const Poset& p, const std::vector<std::size_t>& elements) {
  Matching mt{std::vector<std::size_t>(p.size(), npos), std::vector<std::size_t>(p.size(), npos), 0};
  std::vector<char> in(p.size(), 0);
  for (std::size_t e : elements) in[e] = 1;
  std::vector<std::size_t> seen(p.size(), npos);
  std::function<bool(std::size_t, std::size_t)> augment = [&](std::size_t x, std::size_t stamp) -> bool {
    bool found = false;
    p.up(x).for_each([&](PointId yy) {
      const std::size_t y = yy;
      if (found || !in[y] || seen[y] == stamp) return;
      seen[y] = stamp;
      if (mt.match_right[y] == npos || augment(mt.match_right[y], stamp)) {
        mt.match_left[x] = y;
        mt.match_right[y] = x;
        found = true;
      }
    });
    return found;
  };
  for (std::size_t x : elements) {
    if (augment(x, x)) ++mt.size;
  }
  return mt;
}

// Maximum antichain via Koenig: the complement of a minimum vertex cover of
// the comparability bipartite graph, read off the alternating-path closure.
std::vector<std::size_t> maximum_antichain(const Poset& p, const std::vector<std::size_t>& elements) {
  const Matching mt = comparability_matching(p, elements);
  std::vector<char> in(p.size(), 0);
  for (std::size_t e : elements) in[e] = 1;
  std::vector<char> left_reached(p.size(), 0);
  std::vector<char> right_reached(p.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t x : elements) {
    if (mt.match_left[x] == npos) {
      left_reached[x] = 1;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    p.up(x).for_each([&](PointId yy) {
      const std::size_t y = yy;
      if (!in[y] || right_reached[y] || mt.match_left[x] == y) return;
      right_reached[y] = 1;
      const std::size_t back = mt.match_right[y];
      if (back != npos && !left_reached[back]) {
        left_reached[back] = 1;
        stack.push_back(back);
      }
    });
  }
  // Cover = unreached left vertices and reached right vertices.
  std::vector<std::size_t> antichain;
  for (std::size_t x : elements) {
    if (left_reached[x] && !right_reached[x]) antichain.push_back(x);
  }
  std::sort(antichain.begin(), antichain.end());
  return antichain;
}

std::vector<PointId> to_labels(const Poset& p, const std::vector<std::size_t>& idx) {
  std::vector<PointId> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(p.labels()[i]);
  return out;
}

// Greedy lexicographically least maximum set: extend the chosen prefix with
// the smallest index that still admits a completion of the target size using
// only larger indices compatible with everything chosen.
template <class Compatible, class Measure>
std::vector<std::size_t> lex_least(const Poset& p, std::size_t target, Compatible compatible, Measure measure) {
  std::vector<std::size_t> chosen;
  std::size_t start = 0;
  while (chosen.size() < target) {
    bool extended = false;
    for (std::size_t x = start; x < p.size() && !extended; ++x) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible(c, x); })) continue;
      std::vector<std::size_t> rest;
      for (std::size_t y = x + 1; y < p.size(); ++y) {
        if (compatible(x, y) &&
            std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible(c, y); })) {
          rest.push_back(y);
        }
      }
      if (chosen.size() + 1 + measure(rest) >= target) {
        chosen.push_back(x);
        start = x + 1;
        extended = true;
      }
    }
    if (!extended) throw Error(ErrorCode::InternalInconsistency, "no completion of a maximum set");
  }
  return chosen;
}

}  // namespace

std::size_t poset_height(const Poset& p, const std::vector<std::size_t>& elements) {
  return longest_chain(p, elements).size();
}

std::size_t poset_width(const Poset& p, const std::vector<std::size_t>& elements) {
  return elements.size() - comparability_matching(p, elements).size;
}

DilworthResult dilworth_decompose(const Poset& p, TieBreak tie) {
  std::vector<std::size_t> all(p.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> chain = longest_chain(p, all);
  std::vector<std::size_t> antichain = maximum_antichain(p, all);
  if (tie == TieBreak::LexLeast) {
    auto comparable = [&](std::size_t x, std::size_t y) { return p.comparable(x, y); };
    auto incomparable = [&](std::size_t x, std::size_t y) { return x != y && !p.comparable(x, y); };
    chain = lex_least(p, chain.size(), comparable,
                      [&](const std::vector<std::size_t>& r) { return poset_height(p, r); });
    antichain = lex_least(p, antichain.size(), incomparable,
                          [&](const std::vector<std::size_t>& r) { return poset_width(p, r); });
    chain = linear_extension(p, chain);
  }
  if (p.size() > 0 && std::max(chain.size(), antichain.size()) < ceil_sqrt(p.size())) {
    throw Error(ErrorCode::InternalInconsistency, "chain and antichain both below sqrt of ground set");
  }
  return {to_labels(p, chain), to_labels(p, antichain)};
}

DilworthResult dilworth_decompose(const AnchoredPoset& p, TieBreak tie) { return dilworth_decompose(p.order, tie); }

}  // namespace mlines

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mlines/betweenness.hpp"
#include "mlines/lines.hpp"

namespace mlines {

/// I(a,b) = {x : [a x b]}, O(a,b) = {x : [x a b] or [a b x]}.
struct InnerOuter {
  PointSet inner;
  PointSet outer;
};

template <BetweennessSource S>
InnerOuter inner_outer(const S& s, PointId a, PointId b);

using Quad = std::array<PointId, 4>;

/// [abc], [bcd], [cda] and [dab]. Throws DuplicatePoint.
template <BetweennessSource S>
bool is_parallelogram(const S& s, const Quad& q);

/// {a,b} and {c,d} are parallel when (a,b,c,d) or (a,b,d,c) is a
/// parallelogram and antipodal when (a,c,b,d) is one. Both throw
/// OverlappingPairs when the pairs share a point.
template <BetweennessSource S>
bool are_parallel(const S& s, Edge p, Edge q);
template <BetweennessSource S>
bool are_antipodal(const S& s, Edge p, Edge q);

enum class PairRelation : std::uint8_t { Alpha = 1, Beta = 2, Gamma = 4 };

struct RelationKinds {
  bool alpha = false;
  bool beta = false;
  bool gamma = false;

  bool empty() const noexcept { return !alpha && !beta && !gamma; }
  std::vector<std::string> names() const;
  friend bool operator==(const RelationKinds&, const RelationKinds&) = default;
};

/// Which of the alpha/beta/gamma relations hold between two distinct pairs
/// generating the same line. Throws IdenticalPairs, DifferentLines.
template <BetweennessSource S>
RelationKinds classify_pair_relation(const S& s, Edge p, Edge q);

/// Relation tests without the same-line precondition.
template <BetweennessSource S>
bool alpha_related(const S& s, Edge p, Edge q);
template <BetweennessSource S>
bool beta_related(const S& s, Edge p, Edge q);
template <BetweennessSource S>
bool gamma_related(const S& s, Edge p, Edge q);

/// With [axb], [bxc], [cxa] for distinct a, b, c, x, reports whether
/// {a,b,c} avoids being collinear. Throws HypothesisUnmet.
template <BetweennessSource S>
LemmaCheck check_center_lemma(const S& s, PointId a, PointId b, PointId c, PointId x);

struct GammaCliqueReport {
  bool holds = true;
  char part = 0;  // 'a', 'b' or 'c' on failure
  std::vector<Edge> gamma_pairs;
  std::vector<PointId> counterexample;
};

/// Finds every gamma-pair generating `line` and checks that none is also a
/// beta-pair, that they are pairwise disjoint, and pairwise gamma-related.
template <BetweennessSource S>
GammaCliqueReport gamma_clique_check(const S& s, const LineSet& lines, const PointSet& line);

/// For pairs (a,b), (u,v), (x,y) that are pairwise gamma-related with [a x u],
/// reports whether {a, y, u} avoids being collinear. Throws HypothesisUnmet.
template <BetweennessSource S>
LemmaCheck gamma_no_mid_check(const S& s, const std::array<Edge, 3>& pairs);

/// d(a,b) = d(c,d), d(a,d) = d(b,c) and d(a,c) = d(b,d) = d(a,b) + d(b,c).
bool parallelogram_metric_iff(const MetricSpace& m, const Quad& q);

struct StructureReport {
  bool vacuous = false;  // D odd in scaled units or no edges at distance D/2
  bool parity = true;
  bool bipartite = true;
  bool rigidity = true;
  std::vector<PointId> counterexample;

  bool holds() const noexcept { return parity && bipartite && rigidity; }
};

/// Checks the structure of H_{D/2}(L): the distance flip along every edge
/// (which yields the parity rule along every path), the bipartite split of
/// each component with distances D within and D/2 across sides, and that the
/// min-degree-2 core only has distances D/2 and D.
StructureReport structure_claims_check(const MetricSpace& m, const LineSet& lines, const PointSet& line);

}  // namespace mlines

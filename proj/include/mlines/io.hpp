#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mlines/betweenness.hpp"
#include "mlines/graph.hpp"
#include "mlines/lines.hpp"
#include "mlines/metric_space.hpp"
#include "mlines/relations.hpp"
#include "mlines/verifier.hpp"
#include "mlines/witnesses.hpp"

namespace mlines {

using Json = nlohmann::ordered_json;

// Every *_from_json throws MalformedInput on schema mismatch; the usual
// validation errors (TriangleViolation, M2Violation, ...) pass through.

/// {"n", "scale", "dist"}
Json metric_to_json(const MetricSpace& m);
MetricSpace metric_from_json(const Json& j);

/// n rows of n comma-separated integers.
std::string metric_to_csv(const MetricSpace& m);
MetricSpace metric_from_csv(std::string_view text, Dist scale = 1);

/// {"n", "triples"}: one canonical orbit per triple, reversals implied.
Json relation_to_json(const BetweennessRelation& b);
BetweennessRelation relation_from_json(const Json& j);

/// [{"members", "generators"}] in LineSet order.
Json lines_to_json(const LineSet& lines);
LineSet lines_from_json(const Json& j, std::size_t universe);

/// {"n", "adjacency"}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

struct Classification {
  Edge pair_a;
  Edge pair_b;
  RelationKinds relations;
};

/// Every pair of generators of `line`, in generator order.
template <BetweennessSource S>
std::vector<Classification> classify_line(const S& s, const LineSet& lines, const PointSet& line);

/// [{"pairA", "pairB", "relations"}]
Json classification_to_json(const std::vector<Classification>& c);
std::vector<Classification> classification_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// lines are member lists. Parsing sets each Line's generator to its two
/// least members, which the schema does not carry.
Json witness_to_json(const WitnessReport& r);
WitnessReport witness_from_json(const Json& j);

Json conjecture_to_json(const ConjectureResult& r);
Json bound_report_to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);
Json aggregate_to_json(const ScanAggregate& a);
Json scaling_fit_to_json(const ScalingFit& f);

}  // namespace mlines

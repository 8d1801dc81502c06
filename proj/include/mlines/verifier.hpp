#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mlines/exact.hpp"
#include "mlines/lines.hpp"
#include "mlines/metric_space.hpp"

namespace mlines {

struct ConjectureResult {
  bool universal = false;
  std::size_t line_count = 0;
  bool holds = false;
};

/// Universal line, or at least n distinct lines. Throws TooFewPoints.
template <BetweennessSource S>
ConjectureResult verify_conjecture(const S& s, std::size_t jobs = 1);

/// formula_value is the least line count meeting the bound with the o(1)
/// term dropped (the exact value when it is rational). Only asserted entries
/// count as violations.
struct BoundEntry {
  std::string name;
  Rational formula_value;
  bool satisfied = false;
  bool asserted = false;
};

struct WitnessSummary {
  std::string operation;
  std::string construction;  // empty when the operation did not apply
  std::string skipped;       // reason when it did not apply
  std::size_t line_count = 0;
  std::size_t guaranteed_count = 0;
  bool verified_distinct = true;
  bool subset_of_lines = true;
  std::string failure;  // InternalInconsistency or other unexpected error

  bool sound() const noexcept {
    return failure.empty() && verified_distinct && subset_of_lines && guaranteed_count <= line_count;
  }
};

struct BoundReport {
  std::size_t n = 0;
  std::optional<Rational> diameter;
  std::optional<std::size_t> w;  // |W| including 0
  std::size_t line_count = 0;
  bool universal = false;
  bool conjecture_holds = false;
  std::vector<BoundEntry> bounds;
  std::vector<WitnessSummary> witnesses;

  bool asserted_ok() const noexcept;
};

/// Throws TooFewPoints.
BoundReport verify_bounds(const MetricSpace& m, std::size_t jobs = 1);
BoundReport verify_bounds(const BetweennessRelation& b, std::size_t jobs = 1);

/// Runs every witness operation that applies to `m` and checks each report
/// against `lines`.
std::vector<WitnessSummary> witness_summaries(const MetricSpace& m, const LineSet& lines);

/// Uniform distances in [1, max_dist], then closed under shortest paths so
/// the triangle inequality holds.
MetricSpace random_metric(std::mt19937_64& rng, std::size_t n, Dist max_dist);

enum class CorpusFormat { Graph6, EdgeList, MatrixJson };

/// "graph6", "edgelist", "matrix-json"; throws MalformedInput.
CorpusFormat parse_corpus_format(const std::string& name);

struct ScanOptions {
  CorpusFormat format = CorpusFormat::Graph6;
  bool conjecture = true;
  bool bounds = true;
  bool witnesses = false;
  std::size_t jobs = 1;
};

struct ScanAggregate {
  std::size_t instances = 0;
  std::size_t parse_errors = 0;
  std::size_t conjecture_violations = 0;
  std::size_t bound_violations = 0;
  std::size_t witness_failures = 0;
  std::optional<std::size_t> min_margin_instance;
  std::optional<Rational> min_margin;  // line_count - n/(5w)
  double seconds = 0;                  // wall time; never written to the stream

  bool ok() const noexcept { return conjecture_violations == 0 && bound_violations == 0 && witness_failures == 0; }
};

/// Streams instances from `in` and writes one JSON line per instance in input
/// order, then {"aggregate": ...}. Output does not depend on opt.jobs.
/// Instances that fail to parse are reported and skipped.
ScanAggregate scan_corpus(std::istream& in, const ScanOptions& opt, std::ostream& out);

enum class Family { KPartite, SubdividedPath };

/// "kpartite", "subdivided-path"; throws MalformedInput.
Family parse_family(const std::string& name);
std::string family_name(Family f);

struct ScalingFit {
  Family family = Family::KPartite;
  std::vector<std::size_t> sizes;   // family parameter (n or s)
  std::vector<std::size_t> points;  // vertex counts
  std::vector<std::size_t> counts;  // exact line counts
  double slope = 0;                 // least squares, log count against log n
  double residual = 0;              // root mean square
  bool consistent = false;          // slope in [1.1, 1.6]
};

/// Throws TooFewSizes for fewer than 3 sizes, UniversalLineInFamily.
ScalingFit scaling_fit(Family family, const std::vector<std::size_t>& sizes, std::size_t jobs = 1);

}  // namespace mlines

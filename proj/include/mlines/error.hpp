#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mlines {

using PointId = std::uint32_t;
using Dist = std::int64_t;

enum class ErrorCode {
  // metric_core
  NonZeroDiagonal,
  Asymmetric,
  NonPositiveOffDiagonal,
  TriangleViolation,
  NotSquare,
  TooFewPoints,
  NTooLarge,
  DuplicatePoint,
  EmptySubset,
  PointOutOfRange,
  // betweenness_core
  M0Violation,
  M2Violation,
  M3Violation,
  DuplicateInSequence,
  InternalInconsistency,
  // lines_engine
  SamePoint,
  UnknownLine,
  PreconditionUnmet,
  NoDistances,
  // graph_metrics
  MalformedGraph6,
  MalformedInput,
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  NTooSmall,
  STooSmall,
  // relations
  OverlappingPairs,
  DifferentLines,
  IdenticalPairs,
  HypothesisUnmet,
  // witnesses
  UniversalLinePresent,
  NotA3Metric,
  NotGammaFamily,
  // verifier
  UniversalLineInFamily,
  TooFewSizes,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `points()` carries the witnessing
/// indices named by the error (e.g. the violating triple of a
/// TriangleViolation), in the order the error kind documents.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::size_t> points = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& points() const noexcept { return points_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> points_;
};

}  // namespace mlines

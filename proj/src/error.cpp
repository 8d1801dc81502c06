#include "mlines/error.hpp"

namespace mlines {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::Asymmetric: return "Asymmetric";
    case ErrorCode::NonPositiveOffDiagonal: return "NonPositiveOffDiagonal";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NTooLarge: return "NTooLarge";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::M0Violation: return "M0Violation";
    case ErrorCode::M2Violation: return "M2Violation";
    case ErrorCode::M3Violation: return "M3Violation";
    case ErrorCode::DuplicateInSequence: return "DuplicateInSequence";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::UnknownLine: return "UnknownLine";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::NoDistances: return "NoDistances";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::STooSmall: return "STooSmall";
    case ErrorCode::OverlappingPairs: return "OverlappingPairs";
    case ErrorCode::DifferentLines: return "DifferentLines";
    case ErrorCode::IdenticalPairs: return "IdenticalPairs";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::UniversalLinePresent: return "UniversalLinePresent";
    case ErrorCode::NotA3Metric: return "NotA3Metric";
    case ErrorCode::NotGammaFamily: return "NotGammaFamily";
    case ErrorCode::UniversalLineInFamily: return "UniversalLineInFamily";
    case ErrorCode::TooFewSizes: return "TooFewSizes";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::vector<std::size_t> points)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      points_(std::move(points)) {}

}  // namespace mlines

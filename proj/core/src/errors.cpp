#include "b1f/errors.hpp"

namespace b1f {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::DistanceOutOfRange: return "DistanceOutOfRange";
    case ErrorCode::DuplicateDistance: return "DuplicateDistance";
    case ErrorCode::NotPerfectMatching: return "NotPerfectMatching";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::OverlappingFactors: return "OverlappingFactors";
    case ErrorCode::IncompleteCover: return "IncompleteCover";
    case ErrorCode::FactorsShareEdge: return "FactorsShareEdge";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::UnsupportedConnectionSetSize: return "UnsupportedConnectionSetSize";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::DisconnectedParameter: return "DisconnectedParameter";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::WrongConnectionSet: return "WrongConnectionSet";
    case ErrorCode::ConditionCNotSatisfied: return "ConditionCNotSatisfied";
    case ErrorCode::UnsupportedBase: return "UnsupportedBase";
    case ErrorCode::NotRegular34: return "NotRegular34";
    case ErrorCode::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

std::string_view to_string(RangeReason reason) {
  switch (reason) {
    case RangeReason::ProvenNonexistent: return "proven nonexistent by exhaustive search";
    case RangeReason::TooFewTypes: return "fewer possible pair types than required";
    case RangeReason::Degenerate: return "degenerate graph";
    case RangeReason::Unsupported: return "unsupported parameters";
  }
  return "unknown";
}

}  // namespace b1f

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace b1f {

enum class ErrorCode {
  OddOrder,
  DistanceOutOfRange,
  DuplicateDistance,
  NotPerfectMatching,
  EdgeNotInGraph,
  OverlappingFactors,
  IncompleteCover,
  FactorsShareEdge,
  OrderMismatch,
  UnsupportedConnectionSetSize,
  ParameterOutOfRange,
  DisconnectedParameter,
  InvalidParams,
  WrongConnectionSet,
  ConditionCNotSatisfied,
  UnsupportedBase,
  NotRegular34,
  Disconnected,
};

std::string_view to_string(ErrorCode code);

// Base of every error the library throws; `code()` identifies the failure
// without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Why a construction parameter was refused.
enum class RangeReason {
  ProvenNonexistent,  // exhaustive search shows no such factorisation
  TooFewTypes,        // the graph is too small to carry m distinct pair types
  Degenerate,         // the graph is not the connected regular graph the family needs
  Unsupported,        // outside what the construction covers
};

std::string_view to_string(RangeReason reason);

class ParameterError : public Error {
 public:
  ParameterError(ErrorCode code, RangeReason reason, const std::string& what)
      : Error(code, what), reason_(reason) {}

  RangeReason reason() const noexcept { return reason_; }

 private:
  RangeReason reason_;
};

}  // namespace b1f

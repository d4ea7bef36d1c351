#pragma once

#include <stdexcept>
#include <string>

namespace logamoeba {

enum class ErrorCode {
  InvalidInput,
  EmptyPolynomial,
  DegeneratePolygon,
  EvalAtTorusBoundary,
  NonConvergence,
  IdenticallyZeroResultant,
  GaussUndefined,
  TotalMultiplicityMismatch,
  DegreeMismatch,
  FiberNearBranch,
  FiberEscape,
  SingularCriticalLocus,
  TrackingCollision,
  ParallelLines,
  NodeOnTorusBoundary,
  NotNodal,
  ZeroSignNode,
  SignVerificationFailed,
  IoError,
};

const char* to_string(ErrorCode code);

// True for codes that mean "the input is mathematically outside the domain
// of the requested operation" as opposed to bad input or numerical failure.
bool is_mathematical_refusal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Non-fatal condition attached to a result.
struct Diagnostic {
  ErrorCode code;
  std::string message;
};

}  // namespace logamoeba

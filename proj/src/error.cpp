#include "logamoeba/error.hpp"

namespace logamoeba {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::EmptyPolynomial: return "EmptyPolynomial";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::EvalAtTorusBoundary: return "EvalAtTorusBoundary";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::IdenticallyZeroResultant: return "IdenticallyZeroResultant";
    case ErrorCode::GaussUndefined: return "GaussUndefined";
    case ErrorCode::TotalMultiplicityMismatch: return "TotalMultiplicityMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FiberNearBranch: return "FiberNearBranch";
    case ErrorCode::FiberEscape: return "FiberEscape";
    case ErrorCode::SingularCriticalLocus: return "SingularCriticalLocus";
    case ErrorCode::TrackingCollision: return "TrackingCollision";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::NodeOnTorusBoundary: return "NodeOnTorusBoundary";
    case ErrorCode::NotNodal: return "NotNodal";
    case ErrorCode::ZeroSignNode: return "ZeroSignNode";
    case ErrorCode::SignVerificationFailed: return "SignVerificationFailed";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_mathematical_refusal(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegeneratePolygon:
    case ErrorCode::IdenticallyZeroResultant:
    case ErrorCode::GaussUndefined:
    case ErrorCode::FiberNearBranch:
    case ErrorCode::FiberEscape:
    case ErrorCode::SingularCriticalLocus:
    case ErrorCode::ParallelLines:
    case ErrorCode::NodeOnTorusBoundary:
    case ErrorCode::NotNodal:
    case ErrorCode::ZeroSignNode:
      return true;
    default:
      return false;
  }
}

}  // namespace logamoeba

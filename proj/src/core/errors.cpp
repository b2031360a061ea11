#include "pbb/core/errors.hpp"

namespace pbb {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonMonotoneEdges: return "NonMonotoneEdges";
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::IncompatibleGrids: return "IncompatibleGrids";
    case ErrorCode::ZeroReferenceNorm: return "ZeroReferenceNorm";
    case ErrorCode::NonNestedGrids: return "NonNestedGrids";
    case ErrorCode::EmptyModeSet: return "EmptyModeSet";
    case ErrorCode::UnstableStep: return "UnstableStep";
    case ErrorCode::ZeroWaveSpeed: return "ZeroWaveSpeed";
    case ErrorCode::LimiterRequired: return "LimiterRequired";
    case ErrorCode::UnsupportedBoundary: return "UnsupportedBoundary";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::Diverged: return "Diverged";
    case ErrorCode::NotSPD: return "NotSPD";
    case ErrorCode::NonPowerOfTwo: return "NonPowerOfTwo";
    case ErrorCode::NonPositiveDuration: return "NonPositiveDuration";
    case ErrorCode::ReferenceTooCoarse: return "ReferenceTooCoarse";
    case ErrorCode::MixedSolverIds: return "MixedSolverIds";
    case ErrorCode::Extrapolation: return "Extrapolation";
    case ErrorCode::NotFaster: return "NotFaster";
    case ErrorCode::ZeroBaselineTime: return "ZeroBaselineTime";
    case ErrorCode::EmptyClaim: return "EmptyClaim";
    case ErrorCode::InvalidRecord: return "InvalidRecord";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace pbb

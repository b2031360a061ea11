#pragma once

/// @file
/// @brief Typed error codes shared by every module.

#include <stdexcept>
#include <string>

namespace pbb {

enum class ErrorCode {
  // grids and fields
  NonMonotoneEdges,
  DegenerateDomain,
  IncompatibleGrids,
  ZeroReferenceNorm,
  NonNestedGrids,
  EmptyModeSet,
  // time stepping and solvers
  UnstableStep,
  ZeroWaveSpeed,
  LimiterRequired,
  UnsupportedBoundary,
  SingularMatrix,
  Diverged,
  NotSPD,
  NonPowerOfTwo,
  // benchmarking
  NonPositiveDuration,
  ReferenceTooCoarse,
  MixedSolverIds,
  Extrapolation,
  NotFaster,
  ZeroBaselineTime,
  EmptyClaim,
  InvalidRecord,
  // generic
  InvalidArgument,
  IoFailure,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-checkable reason code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace pbb

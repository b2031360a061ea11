#pragma once

/// @file
/// @brief Second-order central finite differences for linear advection.

#include "pbb/solvers1d/time_stepping.hpp"

namespace pbb {

/// Periodic linear advection u_t + speed u_x = 0 on a uniform grid, nodal
/// values at cell centers, SSPRK3 in time. speed = 0 returns the samples.
Field fd2_advection_solve(const Grid1D& grid, const std::function<double(double)>& ic,
                          double speed, const SolverConfig1D& config,
                          SolveDiagnostics* diag = nullptr);

}  // namespace pbb

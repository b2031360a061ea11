#pragma once

/// @file
/// @brief First-order finite volume Burgers solver with the exact-Riemann
/// Godunov interface flux.

#include <algorithm>

#include "pbb/solvers1d/time_stepping.hpp"

namespace pbb {

/// Godunov flux for f(u) = u^2/2: max(f(max(ul,0)), f(min(ur,0))).
inline double godunov_flux(double ul, double ur) {
  const double a = std::max(ul, 0.0);
  const double b = std::min(ur, 0.0);
  return std::max(0.5 * a * a, 0.5 * b * b);
}

/// Periodic cell-average Burgers solve, first order in space, SSPRK3 in time.
Field fv_godunov_burgers_solve(const Grid1D& grid, const std::function<double(double)>& ic,
                               const SolverConfig1D& config, SolveDiagnostics* diag = nullptr);

}  // namespace pbb

#pragma once

/// @file
/// @brief Fifth-order WENO finite volume Burgers solver with Godunov flux.

#include "pbb/solvers1d/time_stepping.hpp"

namespace pbb {

/// Periodic uniform-grid Burgers solve. Interface states come from classical
/// fifth-order WENO reconstruction (smoothness indicators with eps = 1e-6),
/// the interface flux is Godunov, time integration is SSPRK3. The IC is
/// projected with per-cell Gauss-Legendre integration so the spatial order
/// is visible in refinement studies. Requires n >= 6.
Field weno5_burgers_solve(const Grid1D& grid, const std::function<double(double)>& ic,
                          const SolverConfig1D& config, SolveDiagnostics* diag = nullptr);

}  // namespace pbb

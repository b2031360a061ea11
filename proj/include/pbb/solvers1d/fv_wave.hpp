#pragma once

/// @file
/// @brief Finite volume wave equation solver for possibly irregular grids.

#include "pbb/solvers1d/time_stepping.hpp"

namespace pbb {

/// Second-order wave equation as the first-order system u_t = v,
/// v_t = c^2 u_xx in conservative finite volume form. Interface gradients
/// use adjacent cell centers, so irregular spacing is supported. Dirichlet
/// values for u come from config.boundary; the returned Field holds
/// components (u, v).
Field fv_wave_solve(const Grid1D& grid, const std::function<double(double)>& ic_u,
                    const std::function<double(double)>& ic_v, double wavespeed,
                    const SolverConfig1D& config, SolveDiagnostics* diag = nullptr);

}  // namespace pbb

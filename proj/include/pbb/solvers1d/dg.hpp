#pragma once

/// @file
/// @brief Runge-Kutta discontinuous Galerkin solver with a modal Legendre
/// basis, upwind or Godunov interface fluxes, and an optional TVB limiter.

#include "pbb/solvers1d/time_stepping.hpp"

namespace pbb {

enum class FluxKind { LinearAdvection, Burgers };

struct FluxSpec {
  FluxKind kind = FluxKind::LinearAdvection;
  double speed = 1.0;

  static FluxSpec linear_advection(double c) { return {FluxKind::LinearAdvection, c}; }
  static FluxSpec burgers() { return {FluxKind::Burgers, 0.0}; }
};

/// Modal RKDG solve. The IC is projected cell by cell with (p+2)-point
/// Gauss-Legendre quadrature; t_final = 0 returns that projection. The TVB
/// minmod limiter, when configured, runs after every integrator stage. With
/// no limiter a dry run of the same minmod test acts as an oscillation
/// detector and sets limiter_advisory in diag.
Field dg_solve(const Grid1D& grid, const std::function<double(double)>& ic, const FluxSpec& flux,
               int p, const SolverConfig1D& config, SolveDiagnostics* diag = nullptr);

}  // namespace pbb

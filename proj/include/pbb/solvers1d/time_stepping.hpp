#pragma once

/// @file
/// @brief Shared 1D solver configuration, CFL step planning, and the SSPRK3
/// integrator in both a Field-level and an in-place array form.

#include <functional>

#include "pbb/core/errors.hpp"
#include "pbb/core/field.hpp"

namespace pbb {

enum class Scheme1D { FD2, DG, FVGodunov, WENO5, FVWave };

/// Scheme identifier plus the DG polynomial order where applicable.
struct SchemeSpec {
  Scheme1D kind = Scheme1D::FD2;
  int order = 0;

  static SchemeSpec fd2() { return {Scheme1D::FD2, 0}; }
  static SchemeSpec dg(int p) {
    require(p >= 0 && p <= 3, ErrorCode::InvalidArgument, "DG polynomial order must be in 0..3");
    return {Scheme1D::DG, p};
  }
  static SchemeSpec fv_godunov() { return {Scheme1D::FVGodunov, 0}; }
  static SchemeSpec weno5() { return {Scheme1D::WENO5, 0}; }
  static SchemeSpec fv_wave() { return {Scheme1D::FVWave, 0}; }
};

enum class BoundaryKind { Periodic, Dirichlet };

struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::Periodic;
  double left = 0.0;
  double right = 0.0;

  static BoundarySpec periodic() { return {}; }
  static BoundarySpec dirichlet(double left, double right) {
    return {BoundaryKind::Dirichlet, left, right};
  }
};

enum class LimiterKind { None, TVBMinmod };

struct LimiterSpec {
  LimiterKind kind = LimiterKind::None;
  double tvb_m = 20.0;

  static LimiterSpec none() { return {}; }
  static LimiterSpec tvb_minmod(double m) { return {LimiterKind::TVBMinmod, m}; }
};

struct SolverConfig1D {
  SchemeSpec scheme;
  double cfl_factor = 0.5;
  double t_final = 1.0;
  BoundarySpec boundary;
  LimiterSpec limiter;
};

/// Fixed step size, whole step count, and the trailing shortened step.
struct TimeStepPlan {
  double dt = 0.0;
  long n_steps = 0;
  double partial = 0.0;
};

/// What a solve actually did, filled in by the solver when requested.
struct SolveDiagnostics {
  long n_steps = 0;
  double dt = 0.0;
  bool limiter_advisory = false;
};

/// Split t_final into n_steps of dt plus one shortened step, with
/// n_steps*dt + partial = t_final to relative 1e-12.
TimeStepPlan plan_time_steps(double t_final, double dt);

/// CFL step size: cfl * min_width / wavespeed, with an extra 1/(2p+1) for DG.
TimeStepPlan compute_dt(const Grid1D& grid, double max_wavespeed, double cfl_factor,
                        const SchemeSpec& scheme, double t_final);

/// One SSPRK3 step at the Field level. Throws UnstableStep when a stage
/// produces a non-finite value.
Field ssprk3_step(const Field& state, const std::function<Field(const Field&)>& rhs, double dt);

namespace detail {

inline void check_stage_finite(const Eigen::ArrayXd& v) {
  require(v.allFinite(), ErrorCode::UnstableStep,
          "non-finite value in an integrator stage, reduce the CFL factor");
}

/// In-place SSPRK3 update used by the solvers. rhs(u, k) writes the spatial
/// operator into k; post(u) runs after every stage (limiters).
template <class Rhs, class Post>
void ssprk3_advance(Eigen::ArrayXd& u, Rhs&& rhs, double dt, Eigen::ArrayXd& stage,
                    Eigen::ArrayXd& k, Post&& post) {
  rhs(u, k);
  stage = u + dt * k;
  post(stage);
  check_stage_finite(stage);
  rhs(stage, k);
  stage = 0.75 * u + 0.25 * (stage + dt * k);
  post(stage);
  check_stage_finite(stage);
  rhs(stage, k);
  u = (1.0 / 3.0) * u + (2.0 / 3.0) * (stage + dt * k);
  post(u);
  check_stage_finite(u);
}

}  // namespace detail

}  // namespace pbb

#include "pbb/solvers1d/time_stepping.hpp"

#include <cmath>

namespace pbb {

TimeStepPlan plan_time_steps(double t_final, double dt) {
  require(t_final >= 0.0, ErrorCode::InvalidArgument, "t_final must be non-negative");
  require(dt > 0.0, ErrorCode::InvalidArgument, "dt must be positive");
  TimeStepPlan plan;
  plan.dt = dt;
  if (t_final == 0.0) return plan;

  const double ratio = t_final / dt;
  long n = static_cast<long>(std::floor(ratio));
  // snap across roundoff when the horizon is an exact multiple of dt
  if (ratio - static_cast<double>(n) > 1.0 - 1e-9) ++n;
  double partial = t_final - static_cast<double>(n) * dt;
  if (std::abs(partial) <= 1e-12 * std::max(t_final, dt)) partial = 0.0;
  plan.n_steps = n;
  plan.partial = partial;
  return plan;
}

TimeStepPlan compute_dt(const Grid1D& grid, double max_wavespeed, double cfl_factor,
                        const SchemeSpec& scheme, double t_final) {
  require(max_wavespeed > 0.0, ErrorCode::ZeroWaveSpeed,
          "CFL step size needs a positive wavespeed");
  require(cfl_factor > 0.0 && cfl_factor <= 1.0, ErrorCode::InvalidArgument,
          "cfl_factor must lie in (0,1]");
  double dt = cfl_factor * grid.min_width() / max_wavespeed;
  if (scheme.kind == Scheme1D::DG) dt /= static_cast<double>(2 * scheme.order + 1);
  return plan_time_steps(t_final, dt);
}

Field ssprk3_step(const Field& state, const std::function<Field(const Field&)>& rhs, double dt) {
  require(!state.is_spectral(), ErrorCode::InvalidArgument,
          "the Field-level integrator works on real layouts");
  Field u1 = state;
  u1.values() = state.values() + dt * rhs(state).values();
  detail::check_stage_finite(u1.values());
  Field u2 = state;
  u2.values() = 0.75 * state.values() + 0.25 * (u1.values() + dt * rhs(u1).values());
  detail::check_stage_finite(u2.values());
  Field out = state;
  out.values() =
      (1.0 / 3.0) * state.values() + (2.0 / 3.0) * (u2.values() + dt * rhs(u2).values());
  detail::check_stage_finite(out.values());
  return out;
}

}  // namespace pbb

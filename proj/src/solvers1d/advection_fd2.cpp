#include "pbb/solvers1d/advection_fd2.hpp"

#include <cmath>

namespace pbb {

Field fd2_advection_solve(const Grid1D& grid, const std::function<double(double)>& ic,
                          double speed, const SolverConfig1D& config, SolveDiagnostics* diag) {
  require(config.boundary.kind == BoundaryKind::Periodic, ErrorCode::UnsupportedBoundary,
          "central-difference advection is periodic only");
  require(grid.uniform_spacing(), ErrorCode::InvalidArgument,
          "central-difference advection needs a uniform grid");

  Field f = Field::nodal(grid);
  const int n = grid.n_cells();
  for (int i = 0; i < n; ++i) f.values()(i) = ic(grid.center(i));
  if (speed == 0.0 || config.t_final == 0.0) return f;

  const TimeStepPlan plan =
      compute_dt(grid, std::abs(speed), config.cfl_factor, SchemeSpec::fd2(), config.t_final);
  const double coef = -speed / (2.0 * grid.width(0));

  Eigen::ArrayXd& u = f.values();
  Eigen::ArrayXd stage(n), k(n);
  const auto rhs = [&](const Eigen::ArrayXd& v, Eigen::ArrayXd& out) {
    out(0) = coef * (v(1) - v(n - 1));
    for (int i = 1; i + 1 < n; ++i) out(i) = coef * (v(i + 1) - v(i - 1));
    out(n - 1) = coef * (v(0) - v(n - 2));
  };
  const auto no_post = [](Eigen::ArrayXd&) {};

  for (long s = 0; s < plan.n_steps; ++s) detail::ssprk3_advance(u, rhs, plan.dt, stage, k, no_post);
  if (plan.partial > 0.0) detail::ssprk3_advance(u, rhs, plan.partial, stage, k, no_post);

  if (diag) {
    diag->n_steps = plan.n_steps + (plan.partial > 0.0 ? 1 : 0);
    diag->dt = plan.dt;
  }
  return f;
}

}  // namespace pbb

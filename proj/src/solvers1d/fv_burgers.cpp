#include "pbb/solvers1d/fv_burgers.hpp"

#include <cmath>

namespace pbb {

Field fv_godunov_burgers_solve(const Grid1D& grid, const std::function<double(double)>& ic,
                               const SolverConfig1D& config, SolveDiagnostics* diag) {
  require(config.boundary.kind == BoundaryKind::Periodic, ErrorCode::UnsupportedBoundary,
          "the finite volume Burgers solver is periodic only");

  Field f = Field::cell_average(grid);
  const int n = grid.n_cells();
  Eigen::ArrayXd& u = f.values();
  for (int i = 0; i < n; ++i) u(i) = ic(grid.center(i));
  if (config.t_final == 0.0) return f;

  const double max_u = u.abs().maxCoeff();
  const TimeStepPlan plan =
      compute_dt(grid, max_u, config.cfl_factor, SchemeSpec::fv_godunov(), config.t_final);

  Eigen::ArrayXd fhat(n + 1), stage(n), k(n);
  const auto rhs = [&](const Eigen::ArrayXd& v, Eigen::ArrayXd& out) {
    for (int j = 1; j < n; ++j) fhat(j) = godunov_flux(v(j - 1), v(j));
    fhat(0) = godunov_flux(v(n - 1), v(0));
    fhat(n) = fhat(0);
    for (int i = 0; i < n; ++i) out(i) = (fhat(i) - fhat(i + 1)) / grid.width(i);
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

#include "pbb/solvers1d/fv_wave.hpp"

#include <cmath>

namespace pbb {

Field fv_wave_solve(const Grid1D& grid, const std::function<double(double)>& ic_u,
                    const std::function<double(double)>& ic_v, double wavespeed,
                    const SolverConfig1D& config, SolveDiagnostics* diag) {
  require(config.boundary.kind == BoundaryKind::Dirichlet, ErrorCode::UnsupportedBoundary,
          "the wave solver uses Dirichlet boundaries");

  Field f = Field::cell_average(grid, 2);
  const int n = grid.n_cells();
  for (int i = 0; i < n; ++i) {
    f.at(i, 0) = ic_u(grid.center(i));
    f.at(i, 1) = ic_v(grid.center(i));
  }
  if (config.t_final == 0.0) return f;

  const TimeStepPlan plan = compute_dt(grid, std::abs(wavespeed), config.cfl_factor,
                                       SchemeSpec::fv_wave(), config.t_final);
  const double c2 = wavespeed * wavespeed;
  const double u_left = config.boundary.left;
  const double u_right = config.boundary.right;

  // reciprocal spans between adjacent cell centers, boundaries one-sided
  Eigen::ArrayXd inv_span(n + 1);
  inv_span(0) = 1.0 / (grid.center(0) - grid.x_min());
  for (int i = 1; i < n; ++i) inv_span(i) = 1.0 / (grid.center(i) - grid.center(i - 1));
  inv_span(n) = 1.0 / (grid.x_max() - grid.center(n - 1));

  Eigen::ArrayXd grad(n + 1), stage(2 * n), k(2 * n);
  // dof layout is component-major: u block then v block
  const auto rhs = [&](const Eigen::ArrayXd& s, Eigen::ArrayXd& out) {
    grad(0) = (s(0) - u_left) * inv_span(0);
    for (int j = 1; j < n; ++j) grad(j) = (s(j) - s(j - 1)) * inv_span(j);
    grad(n) = (u_right - s(n - 1)) * inv_span(n);
    for (int i = 0; i < n; ++i) {
      out(i) = s(n + i);
      out(n + i) = c2 * (grad(i + 1) - grad(i)) / grid.width(i);
    }
  };
  const auto no_post = [](Eigen::ArrayXd&) {};

  Eigen::ArrayXd& w = f.values();
  for (long s = 0; s < plan.n_steps; ++s) detail::ssprk3_advance(w, rhs, plan.dt, stage, k, no_post);
  if (plan.partial > 0.0) detail::ssprk3_advance(w, rhs, plan.partial, stage, k, no_post);

  if (diag) {
    diag->n_steps = plan.n_steps + (plan.partial > 0.0 ? 1 : 0);
    diag->dt = plan.dt;
  }
  return f;
}

}  // namespace pbb

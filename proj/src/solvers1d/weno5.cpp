#include "pbb/solvers1d/weno5.hpp"

#include <cmath>

#include "pbb/core/quadrature.hpp"
#include "pbb/solvers1d/fv_burgers.hpp"

namespace pbb {

namespace {

constexpr double kWenoEps = 1e-6;

// Value at the right face of the center cell from five cell averages.
double weno_face(double m2, double m1, double c0, double p1, double p2) {
  const double b0 = (13.0 / 12.0) * (m2 - 2.0 * m1 + c0) * (m2 - 2.0 * m1 + c0) +
                    0.25 * (m2 - 4.0 * m1 + 3.0 * c0) * (m2 - 4.0 * m1 + 3.0 * c0);
  const double b1 = (13.0 / 12.0) * (m1 - 2.0 * c0 + p1) * (m1 - 2.0 * c0 + p1) +
                    0.25 * (m1 - p1) * (m1 - p1);
  const double b2 = (13.0 / 12.0) * (c0 - 2.0 * p1 + p2) * (c0 - 2.0 * p1 + p2) +
                    0.25 * (3.0 * c0 - 4.0 * p1 + p2) * (3.0 * c0 - 4.0 * p1 + p2);
  const double a0 = 0.1 / ((kWenoEps + b0) * (kWenoEps + b0));
  const double a1 = 0.6 / ((kWenoEps + b1) * (kWenoEps + b1));
  const double a2 = 0.3 / ((kWenoEps + b2) * (kWenoEps + b2));
  const double inv = 1.0 / (a0 + a1 + a2);
  const double q0 = (2.0 * m2 - 7.0 * m1 + 11.0 * c0) / 6.0;
  const double q1 = (-m1 + 5.0 * c0 + 2.0 * p1) / 6.0;
  const double q2 = (2.0 * c0 + 5.0 * p1 - p2) / 6.0;
  return inv * (a0 * q0 + a1 * q1 + a2 * q2);
}

}  // namespace

Field weno5_burgers_solve(const Grid1D& grid, const std::function<double(double)>& ic,
                          const SolverConfig1D& config, SolveDiagnostics* diag) {
  require(config.boundary.kind == BoundaryKind::Periodic, ErrorCode::UnsupportedBoundary,
          "the WENO solver is periodic only");
  require(grid.uniform_spacing(), ErrorCode::InvalidArgument,
          "the WENO solver needs a uniform grid");
  const int n = grid.n_cells();
  require(n >= 6, ErrorCode::InvalidArgument, "WENO reconstruction needs at least 6 cells");

  Field f = Field::cell_average(grid);
  Eigen::ArrayXd& u = f.values();
  {
    const GaussLegendre& q = gauss_legendre(5);
    for (int i = 0; i < n; ++i) {
      const double xc = grid.center(i), half = 0.5 * grid.width(i);
      double sum = 0.0;
      for (int j = 0; j < q.nodes.size(); ++j)
        sum += q.weights(j) * ic(xc + half * q.nodes(j));
      u(i) = 0.5 * sum;
    }
  }
  if (config.t_final == 0.0) return f;

  const TimeStepPlan plan = compute_dt(grid, u.abs().maxCoeff(), config.cfl_factor,
                                       SchemeSpec::weno5(), config.t_final);
  const double inv_dx = 1.0 / grid.width(0);

  Eigen::ArrayXd pad(n + 6), fhat(n + 1), stage(n), k(n);
  const auto rhs = [&](const Eigen::ArrayXd& v, Eigen::ArrayXd& out) {
    pad.segment(3, n) = v;
    pad.head(3) = v.tail(3);
    pad.tail(3) = v.head(3);
    const double* c = pad.data() + 3;
    for (int j = 0; j < n; ++j) {
      // face j sits between cells j-1 and j
      const double um = weno_face(c[j - 3], c[j - 2], c[j - 1], c[j], c[j + 1]);
      const double up = weno_face(c[j + 2], c[j + 1], c[j], c[j - 1], c[j - 2]);
      fhat(j) = godunov_flux(um, up);
    }
    fhat(n) = fhat(0);
    for (int i = 0; i < n; ++i) out(i) = (fhat(i) - fhat(i + 1)) * inv_dx;
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

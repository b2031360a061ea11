#include "pbb/solvers1d/dg.hpp"

#include <cmath>

#include "pbb/core/quadrature.hpp"
#include "pbb/solvers1d/fv_burgers.hpp"

namespace pbb {

namespace {

double minmod_tvb(double a, double b, double c, double m_dx2) {
  if (std::abs(a) <= m_dx2) return a;
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min(a, std::min(b, c));
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max(a, std::max(b, c));
  return 0.0;
}

struct DgOperator {
  const Grid1D& grid;
  FluxSpec flux;
  BoundarySpec boundary;
  int p;
  int nq;
  // quadrature tables: basis(q,k) = P_k(xi_q), dweight(q,k) = w_q P_k'(xi_q)
  double basis[5][4] = {};
  double dweight[5][4] = {};
  Eigen::ArrayXd face_left;   // u at the right face of each cell
  Eigen::ArrayXd face_right;  // u at the left face of each cell
  Eigen::ArrayXd fhat;        // numerical flux at each interface

  DgOperator(const Grid1D& g, const FluxSpec& fl, const BoundarySpec& b, int order)
      : grid(g), flux(fl), boundary(b), p(order), nq(order + 2) {
    const GaussLegendre& q = gauss_legendre(nq);
    for (int i = 0; i < nq; ++i)
      for (int k = 0; k <= p; ++k) {
        basis[i][k] = legendre(k, q.nodes(i));
        dweight[i][k] = q.weights(i) * legendre_derivative(k, q.nodes(i));
      }
    const int n = g.n_cells();
    face_left.resize(n);
    face_right.resize(n);
    fhat.resize(n + 1);
  }

  double physical_flux(double u) const {
    return flux.kind == FluxKind::LinearAdvection ? flux.speed * u : 0.5 * u * u;
  }

  double interface_flux(double ul, double ur) const {
    if (flux.kind == FluxKind::Burgers) return godunov_flux(ul, ur);
    return flux.speed * (flux.speed >= 0.0 ? ul : ur);
  }

  void operator()(const Eigen::ArrayXd& c, Eigen::ArrayXd& out) {
    const int n = grid.n_cells();
    const int nb = p + 1;
    for (int i = 0; i < n; ++i) {
      double sum = 0.0, alt = 0.0;
      for (int k = 0; k <= p; ++k) {
        const double ck = c(i * nb + k);
        sum += ck;
        alt += (k % 2 == 0 ? ck : -ck);
      }
      face_left(i) = sum;
      face_right(i) = alt;
    }
    // interior interfaces j = 1..n-1 sit between cells j-1 and j
    for (int j = 1; j < n; ++j) fhat(j) = interface_flux(face_left(j - 1), face_right(j));
    if (boundary.kind == BoundaryKind::Periodic) {
      fhat(0) = interface_flux(face_left(n - 1), face_right(0));
      fhat(n) = fhat(0);
    } else {
      fhat(0) = interface_flux(boundary.left, face_right(0));
      fhat(n) = interface_flux(face_left(n - 1), boundary.right);
    }
    for (int i = 0; i < n; ++i) {
      double fq[5];
      for (int q = 0; q < nq; ++q) {
        double u = 0.0;
        for (int k = 0; k <= p; ++k) u += c(i * nb + k) * basis[q][k];
        fq[q] = physical_flux(u);
      }
      const double inv_dx = 1.0 / grid.width(i);
      for (int k = 0; k <= p; ++k) {
        double vol = 0.0;
        for (int q = 0; q < nq; ++q) vol += dweight[q][k] * fq[q];
        const double sign = (k % 2 == 0 ? 1.0 : -1.0);
        out(i * nb + k) =
            (2.0 * k + 1.0) * inv_dx * (vol - fhat(i + 1) + sign * fhat(i));
      }
    }
  }

  // TVB minmod on the linear part; activation replaces the cell polynomial
  // with a limited linear one. With apply = false nothing is written and the
  // return value doubles as an oscillation detector: smooth data, even when
  // steep, passes the minmod test unchanged while Gibbs overshoots do not.
  bool limit(Eigen::ArrayXd& c, double m, bool apply) const {
    if (p == 0) return false;
    const int n = grid.n_cells();
    const int nb = p + 1;
    bool activated = false;
    for (int i = 0; i < n; ++i) {
      const double mean = c(i * nb);
      double prev, next;
      if (boundary.kind == BoundaryKind::Periodic) {
        prev = c(((i + n - 1) % n) * nb);
        next = c(((i + 1) % n) * nb);
      } else {
        prev = (i == 0) ? boundary.left : c((i - 1) * nb);
        next = (i == n - 1) ? boundary.right : c((i + 1) * nb);
      }
      const double dp = next - mean, dm = mean - prev;
      double ut = 0.0, utt = 0.0;
      for (int k = 1; k <= p; ++k) {
        const double ck = c(i * nb + k);
        ut += ck;
        utt -= (k % 2 == 0 ? ck : -ck);
      }
      const double m_dx2 = m * grid.width(i) * grid.width(i);
      const double lt = minmod_tvb(ut, dp, dm, m_dx2);
      const double ltt = minmod_tvb(utt, dp, dm, m_dx2);
      if (lt != ut || ltt != utt) {
        activated = true;
        if (!apply) return true;
        c(i * nb + 1) = minmod_tvb(c(i * nb + 1), dp, dm, m_dx2);
        for (int k = 2; k <= p; ++k) c(i * nb + k) = 0.0;
      }
    }
    return activated;
  }
};

}  // namespace

Field dg_solve(const Grid1D& grid, const std::function<double(double)>& ic, const FluxSpec& flux,
               int p, const SolverConfig1D& config, SolveDiagnostics* diag) {
  if (flux.kind == FluxKind::LinearAdvection)
    require(config.boundary.kind == BoundaryKind::Periodic, ErrorCode::UnsupportedBoundary,
            "dirichlet boundaries are supported for the Burgers flux only");

  Field f = Field::modal_dg(grid, p);
  const int n = grid.n_cells();
  const int nb = p + 1;
  Eigen::ArrayXd& c = f.values();

  // L2 projection and the initial wavespeed bound in one quadrature pass
  const GaussLegendre& q = gauss_legendre(p + 2);
  double max_u = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xc = grid.center(i), half = 0.5 * grid.width(i);
    double uq[5];
    for (int j = 0; j < q.nodes.size(); ++j) {
      uq[j] = ic(xc + half * q.nodes(j));
      max_u = std::max(max_u, std::abs(uq[j]));
    }
    for (int k = 0; k <= p; ++k) {
      double proj = 0.0;
      for (int j = 0; j < q.nodes.size(); ++j)
        proj += q.weights(j) * uq[j] * legendre(k, q.nodes(j));
      c(i * nb + k) = 0.5 * (2.0 * k + 1.0) * proj;
    }
  }
  if (config.t_final == 0.0) return f;

  const double wavespeed =
      flux.kind == FluxKind::LinearAdvection ? std::abs(flux.speed) : max_u;
  const TimeStepPlan plan =
      compute_dt(grid, wavespeed, config.cfl_factor, SchemeSpec::dg(p), config.t_final);

  DgOperator op(grid, flux, config.boundary, p);
  const bool limited = config.limiter.kind == LimiterKind::TVBMinmod;
  const double tvb_m = config.limiter.tvb_m;
  const auto post = [&](Eigen::ArrayXd& v) {
    if (limited) op.limit(v, tvb_m, true);
  };

  bool advisory = false;
  Eigen::ArrayXd stage(n * nb), k(n * nb);
  const auto step = [&](double dt) {
    detail::ssprk3_advance(c, op, dt, stage, k, post);
    if (!limited && !advisory) advisory = op.limit(c, tvb_m, false);
  };
  for (long s = 0; s < plan.n_steps; ++s) step(plan.dt);
  if (plan.partial > 0.0) step(plan.partial);

  if (diag) {
    diag->n_steps = plan.n_steps + (plan.partial > 0.0 ? 1 : 0);
    diag->dt = plan.dt;
    diag->limiter_advisory = advisory;
  }
  return f;
}

}  // namespace pbb

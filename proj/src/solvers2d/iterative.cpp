#include "pbb/solvers2d/iterative.hpp"

#include <chrono>
#include <cmath>

namespace pbb {

namespace {

void spmv(const SparseSystem& a, const Eigen::VectorXd& x, Eigen::VectorXd& out) {
  const int* offsets = a.row_offsets.data();
  const int* cols = a.col_indices.data();
  const double* vals = a.values.data();
  const double* xv = x.data();
  for (int i = 0; i < a.n; ++i) {
    double s = 0.0;
    for (int k = offsets[i]; k < offsets[i + 1]; ++k) s += vals[k] * xv[cols[k]];
    out(i) = s;
  }
}

double relative_residual(const Eigen::VectorXd& r, double b_norm) {
  return b_norm > 0.0 ? r.norm() / b_norm : r.norm();
}

Eigen::VectorXd start_vector(const SparseSystem& sys, const std::optional<Eigen::VectorXd>& x0) {
  if (!x0.has_value()) return Eigen::VectorXd::Zero(sys.n);
  require(x0->size() == sys.n, ErrorCode::InvalidArgument,
          "initial guess length must match the system dimension");
  return *x0;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

IterativeResult jacobi_solve(const SparseSystem& system, double tol, int max_iter,
                             const std::optional<Eigen::VectorXd>& x0) {
  system.validate();
  require(max_iter >= 0, ErrorCode::InvalidArgument, "max_iter must be nonnegative");
  Eigen::VectorXd diag(system.n);
  for (int i = 0; i < system.n; ++i) {
    diag(i) = system.at(i, i);
    require(diag(i) != 0.0, ErrorCode::InvalidArgument,
            "jacobi needs a nonzero diagonal in every row");
  }

  const auto t0 = std::chrono::steady_clock::now();
  IterativeResult res;
  res.x = start_vector(system, x0);
  const double b_norm = system.rhs.norm();
  Eigen::VectorXd ax(system.n), r(system.n);
  spmv(system, res.x, ax);
  r = system.rhs - ax;
  double rel = relative_residual(r, b_norm);
  const double rel0 = rel;

  while (rel > tol && res.report.iterations < max_iter) {
    res.x += (r.array() / diag.array()).matrix();
    spmv(system, res.x, ax);
    r = system.rhs - ax;
    rel = relative_residual(r, b_norm);
    res.report.iterations += 1;
    require(rel <= 10.0 * rel0, ErrorCode::Diverged,
            "residual grew past ten times its initial value");
  }
  res.report.final_relative_residual = rel;
  res.report.converged = rel <= tol;
  res.report.wall_time_s = seconds_since(t0);
  return res;
}

IterativeResult cg_solve(const SparseSystem& system, double tol, int max_iter,
                         const std::optional<Eigen::VectorXd>& x0) {
  system.validate();
  require(max_iter >= 0, ErrorCode::InvalidArgument, "max_iter must be nonnegative");

  const auto t0 = std::chrono::steady_clock::now();
  IterativeResult res;
  res.x = start_vector(system, x0);
  const double b_norm = system.rhs.norm();
  Eigen::VectorXd ax(system.n), r(system.n), p(system.n), ap(system.n);
  spmv(system, res.x, ax);
  r = system.rhs - ax;
  double rel = relative_residual(r, b_norm);
  const double rel0 = rel;
  if (rel <= tol) {
    res.report.final_relative_residual = rel;
    res.report.converged = true;
    res.report.wall_time_s = seconds_since(t0);
    return res;
  }

  p = r;
  double rr = r.squaredNorm();
  while (res.report.iterations < max_iter) {
    spmv(system, p, ap);
    const double pap = p.dot(ap);
    require(pap > 0.0, ErrorCode::NotSPD, "search direction with nonpositive curvature");
    const double alpha = rr / pap;
    res.x += alpha * p;
    r -= alpha * ap;
    res.report.iterations += 1;
    rel = relative_residual(r, b_norm);
    if (rel <= tol) {
      // The recurrence can drift from the true residual; confirm before
      // declaring convergence and restart from the true residual otherwise.
      spmv(system, res.x, ax);
      const Eigen::VectorXd true_r = system.rhs - ax;
      const double true_rel = relative_residual(true_r, b_norm);
      if (true_rel <= tol) {
        res.report.final_relative_residual = true_rel;
        res.report.converged = true;
        res.report.wall_time_s = seconds_since(t0);
        return res;
      }
      r = true_r;
      p = r;
      rr = r.squaredNorm();
      rel = true_rel;
      continue;
    }
    require(rel <= 10.0 * rel0, ErrorCode::Diverged,
            "residual grew past ten times its initial value");
    const double rr_next = r.squaredNorm();
    p = r + (rr_next / rr) * p;
    rr = rr_next;
  }

  spmv(system, res.x, ax);
  res.report.final_relative_residual = relative_residual(system.rhs - ax, b_norm);
  res.report.converged = res.report.final_relative_residual <= tol;
  res.report.wall_time_s = seconds_since(t0);
  return res;
}

}  // namespace pbb

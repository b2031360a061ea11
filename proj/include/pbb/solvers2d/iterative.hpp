#pragma once

/// @file
/// @brief Jacobi and conjugate-gradient solvers with convergence reports.

#include <Eigen/Core>
#include <optional>

#include "pbb/solvers2d/sparse_system.hpp"

namespace pbb {

struct IterativeReport {
  int iterations = 0;
  double final_relative_residual = 0.0;
  bool converged = false;
  double wall_time_s = 0.0;
};

struct IterativeResult {
  Eigen::VectorXd x;
  IterativeReport report;
};

/// Damped-free Jacobi sweeps x <- x + D^{-1}(b - Ax) until the relative
/// residual |b - Ax| / |b| drops to tol or max_iter is reached. Throws
/// Diverged once the residual exceeds ten times its initial value and
/// InvalidArgument on a zero diagonal entry.
IterativeResult jacobi_solve(const SparseSystem& system, double tol = 1e-10, int max_iter = 100000,
                             const std::optional<Eigen::VectorXd>& x0 = std::nullopt);

/// Unpreconditioned conjugate gradients under the same convergence contract.
/// Throws NotSPD when a search direction exposes nonpositive curvature.
IterativeResult cg_solve(const SparseSystem& system, double tol = 1e-10, int max_iter = 100000,
                         const std::optional<Eigen::VectorXd>& x0 = std::nullopt);

}  // namespace pbb

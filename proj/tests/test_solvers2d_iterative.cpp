#include <cmath>
#include <vector>

#include "doctest.h"
#include "pbb/core/rng.hpp"
#include "pbb/solvers2d/direct.hpp"
#include "pbb/solvers2d/iterative.hpp"
#include "pbb/solvers2d/poisson.hpp"

using namespace pbb;

namespace {

// Second-difference matrix tridiag(-1, 2, -1) with b = e_1.
SparseSystem laplacian_chain(int n) {
  std::vector<SparseTriplet> t;
  for (int i = 0; i < n; ++i) {
    if (i > 0) t.push_back({i, i - 1, -1.0});
    t.push_back({i, i, 2.0});
    if (i + 1 < n) t.push_back({i, i + 1, -1.0});
  }
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  b(0) = 1.0;
  return SparseSystem::from_triplets(n, t, b);
}

SparseSystem dense_to_system(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  std::vector<SparseTriplet> t;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0.0) t.push_back({static_cast<int>(i), static_cast<int>(j), a(i, j)});
    }
  }
  return SparseSystem::from_triplets(static_cast<int>(a.rows()), t, b);
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int m = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

TEST_SUITE_BEGIN("solvers2d");

TEST_CASE("jacobi sweeps on the four-point chain match the pencil-and-paper iterates") {
  // From zero: x1 = (1/2, 0, 0, 0), x2 = (1/2, 1/4, 0, 0), x3 = (5/8, 1/4, 1/8, 0).
  const SparseSystem sys = laplacian_chain(4);

  const IterativeResult two = jacobi_solve(sys, 0.0, 2);
  CHECK(two.report.iterations == 2);
  CHECK_FALSE(two.report.converged);
  CHECK(two.x(0) == 0.5);
  CHECK(two.x(1) == 0.25);
  CHECK(two.x(2) == 0.0);
  CHECK(two.x(3) == 0.0);

  const IterativeResult three = jacobi_solve(sys, 0.0, 3);
  CHECK(three.x(0) == 0.625);
  CHECK(three.x(1) == 0.25);
  CHECK(three.x(2) == 0.125);
  CHECK(three.x(3) == 0.0);
}

TEST_CASE("jacobi converges to the closed-form chain solution") {
  // A^{-1} e_1 for the n=4 chain is (4, 3, 2, 1)/5.
  const SparseSystem sys = laplacian_chain(4);
  const IterativeResult r = jacobi_solve(sys, 1e-12, 10000);
  CHECK(r.report.converged);
  CHECK(r.report.final_relative_residual <= 1e-12);
  CHECK(r.report.iterations > 10);
  CHECK(r.x(0) == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(r.x(1) == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(r.x(2) == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(r.x(3) == doctest::Approx(0.2).epsilon(1e-10));
}

TEST_CASE("a converged initial guess needs zero sweeps") {
  const SparseSystem sys = laplacian_chain(4);
  const Eigen::VectorXd x0 = lu_solve(sys).x;
  const IterativeResult r = jacobi_solve(sys, 1e-10, 100, x0);
  CHECK(r.report.iterations == 0);
  CHECK(r.report.converged);
  CHECK(r.report.final_relative_residual <= 1e-10);
}

TEST_CASE("jacobi raises once the residual grows past ten times its starting value") {
  Eigen::MatrixXd a(2, 2);
  a << 1.0, 2.0, 2.0, 1.0;  // jacobi iteration radius 2: certain divergence
  Eigen::VectorXd b(2);
  b << 1.0, 1.0;
  const SparseSystem sys = dense_to_system(a, b);
  CHECK_THROWS_AS(jacobi_solve(sys, 1e-10, 1000), Error);
  try {
    jacobi_solve(sys, 1e-10, 1000);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Diverged);
  }
}

TEST_CASE("a zero diagonal entry is rejected up front") {
  Eigen::MatrixXd a(2, 2);
  a << 0.0, 1.0, 1.0, 0.0;
  Eigen::VectorXd b(2);
  b << 1.0, 1.0;
  const SparseSystem sys = dense_to_system(a, b);
  CHECK_THROWS_AS(jacobi_solve(sys, 1e-10, 10), Error);
}

TEST_CASE("jacobi iteration counts on the chain grow quadratically with size") {
  const std::vector<int> sizes = {16, 32, 64, 128};
  std::vector<double> log_n, log_iters;
  for (const int n : sizes) {
    const SparseSystem sys = laplacian_chain(n);
    const IterativeResult r = jacobi_solve(sys, 1e-6, 1000000);
    REQUIRE(r.report.converged);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_iters.push_back(std::log(static_cast<double>(r.report.iterations)));
  }
  const double slope = fit_slope(log_n, log_iters);
  CHECK(slope == doctest::Approx(2.0).epsilon(0.3 / 2.0));
}

TEST_CASE("conjugate gradients finishes the identity system in one iteration") {
  Eigen::VectorXd b(5);
  b << 1.0, -2.0, 0.5, 3.0, 0.25;
  std::vector<SparseTriplet> t;
  for (int i = 0; i < 5; ++i) t.push_back({i, i, 1.0});
  const SparseSystem sys = SparseSystem::from_triplets(5, t, b);
  const IterativeResult r = cg_solve(sys, 1e-10, 10);
  CHECK(r.report.converged);
  CHECK(r.report.iterations == 1);
  for (int i = 0; i < 5; ++i) CHECK(r.x(i) == doctest::Approx(b(i)).epsilon(1e-14));
}

TEST_CASE("negative curvature exposes an indefinite matrix") {
  Eigen::MatrixXd a(2, 2);
  a << 1.0, 0.0, 0.0, -1.0;
  Eigen::VectorXd b(2);
  b << 1.0, 2.0;  // first search direction has p'Ap = 1 - 4 < 0
  const SparseSystem sys = dense_to_system(a, b);
  CHECK_THROWS_AS(cg_solve(sys, 1e-10, 10), Error);
  try {
    cg_solve(sys, 1e-10, 10);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSPD);
  }
}

TEST_CASE("conjugate gradients meets the dimension bound on random spd systems") {
  for (int trial = 0; trial < 25; ++trial) {
    const CounterRng rng(2026, trial);
    const int n = static_cast<int>(rng.uniform_int(0, 2, 50));
    Eigen::MatrixXd bmat(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        bmat(i, j) = rng.uniform(1 + i * n + j, -1.0, 1.0);
      }
    }
    const Eigen::MatrixXd a =
        bmat.transpose() * bmat + static_cast<double>(n) * Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) b(i) = rng.uniform(8000 + i, -1.0, 1.0);
    const SparseSystem sys = dense_to_system(a, b);
    const IterativeResult r = cg_solve(sys, 1e-10, n);
    CHECK(r.report.converged);
    CHECK(r.report.iterations <= n);
    CHECK(r.report.final_relative_residual <= 1e-10);
  }
}

TEST_CASE("iterative solutions agree with the direct factorization on a poisson system") {
  const Grid2D grid = Grid2D::uniform(0.0, 1.0, 0.0, 1.0, 32, 32);
  const SparseSystem sys = assemble_poisson(grid, PoissonBc::Dirichlet, [](double x, double y) {
    return std::sin(3.0 * x + 1.0) * std::cos(2.0 * y);
  });
  const Eigen::VectorXd x_lu = lu_solve(sys).x;

  const IterativeResult cg = cg_solve(sys, 1e-10, 10000);
  const IterativeResult jac = jacobi_solve(sys, 1e-10, 1000000);
  REQUIRE(cg.report.converged);
  REQUIRE(jac.report.converged);
  CHECK((cg.x - x_lu).norm() / x_lu.norm() <= 1e-9);
  CHECK((jac.x - x_lu).norm() / x_lu.norm() <= 1e-9);
  CHECK(cg.report.iterations < jac.report.iterations);
  CHECK(cg.report.wall_time_s > 0.0);
  CHECK(jac.report.wall_time_s > 0.0);
}

TEST_SUITE_END();

#include <cmath>
#include <functional>

#include "doctest.h"
#include "pbb/core/analytic.hpp"
#include "pbb/core/error_norms.hpp"
#include "pbb/solvers2d/ns_spectral.hpp"

using namespace pbb;

namespace {

double taylor_green_ic(double x, double y) {
  return 2.0 * std::cos(x) * std::cos(y);
}

double run_taylor_green_error(int n, double nu, double t) {
  const Grid2D grid = Grid2D::periodic_square(n);
  const SpectralState state = ps_ns_solve(taylor_green_ic, grid, nu, t);
  const auto exact = [nu, t](double x, double y) {
    return taylor_green_vorticity(x, y, t, nu);
  };
  return compute_error(state.physical_vorticity(), Reference(std::function(exact)), Metric::RelL2);
}

double multi_mode_ic(double x, double y) {
  return std::cos(x) + std::sin(y) + 0.6 * std::cos(2.0 * x + y - 0.4);
}

}  // namespace

TEST_SUITE_BEGIN("solvers2d");

TEST_CASE("taylor-green vortex decays to spectral accuracy") {
  // The nonlinear term vanishes identically for this flow and the viscous
  // factor is integrated exactly, so only roundoff separates the run from
  // the closed form.
  CHECK(run_taylor_green_error(64, 0.01, 1.0) < 1e-6);
}

TEST_CASE("taylor-green error collapses faster than any fixed power of n") {
  const double e16 = run_taylor_green_error(16, 0.01, 0.5);
  const double e32 = run_taylor_green_error(32, 0.01, 0.5);
  const double e64 = run_taylor_green_error(64, 0.01, 0.5);
  CHECK((e16 / e32 > 1e3 || e16 < 1e-10));
  CHECK((e32 / e64 > 1e3 || e32 < 1e-10));
}

TEST_CASE("vorticity coefficients keep hermitian symmetry through a run") {
  const Grid2D grid = Grid2D::periodic_square(32);
  const SpectralState state = ps_ns_solve(multi_mode_ic, grid, 0.002, 0.8);
  CHECK(hermitian_asymmetry(state) < 1e-10);
}

TEST_CASE("the mean vorticity mode is frozen in unforced flow") {
  const auto ic = [](double x, double y) { return 0.7 + multi_mode_ic(x, y); };
  const Grid2D grid = Grid2D::periodic_square(32);
  const SpectralState start = ps_ns_solve(ic, grid, 0.001, 0.0);
  const SpectralState end = ps_ns_solve(ic, grid, 0.001, 0.4);
  const std::complex<double> m0 = start.omega_hat(0);
  const std::complex<double> m1 = end.omega_hat(0);
  CHECK(std::abs(m1 - m0) <= 1e-12 * std::abs(m0));
}

TEST_CASE("inviscid energy and enstrophy are conserved over a short horizon") {
  const Grid2D grid = Grid2D::periodic_square(32);
  NsConfig cfg;
  cfg.cfl_factor = 0.02;
  // Drift is pure time-integration error, measured 2.4e-10 at this step size.
  const SpectralState start = ps_ns_solve(multi_mode_ic, grid, 0.0, 0.0, cfg);
  const SpectralState end = ps_ns_solve(multi_mode_ic, grid, 0.0, 0.1, cfg);
  const double e0 = spectral_energy(start);
  const double z0 = spectral_enstrophy(start);
  const double e1 = spectral_energy(end);
  const double z1 = spectral_enstrophy(end);
  REQUIRE(e0 > 0.0);
  REQUIRE(z0 > 0.0);
  CHECK(std::abs(e1 - e0) / e0 < 1e-8);
  CHECK(std::abs(z1 - z0) / z0 < 1e-8);
}

TEST_CASE("grid preconditions for the spectral solver are enforced") {
  SUBCASE("resolution must be a power of two") {
    const Grid2D grid = Grid2D::uniform(0.0, 2.0 * M_PI, 0.0, 2.0 * M_PI, 12, 12, true, true);
    CHECK_THROWS_AS(ps_ns_solve(taylor_green_ic, grid, 0.01, 0.1), Error);
    try {
      ps_ns_solve(taylor_green_ic, grid, 0.01, 0.1);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonPowerOfTwo);
    }
  }
  SUBCASE("both axes must be periodic") {
    const Grid2D grid = Grid2D::uniform(0.0, 2.0 * M_PI, 0.0, 2.0 * M_PI, 16, 16, false, true);
    CHECK_THROWS_AS(ps_ns_solve(taylor_green_ic, grid, 0.01, 0.1), Error);
  }
  SUBCASE("domain must be the 2-pi square") {
    const Grid2D grid = Grid2D::uniform(0.0, 1.0, 0.0, 1.0, 16, 16, true, true);
    CHECK_THROWS_AS(ps_ns_solve(taylor_green_ic, grid, 0.01, 0.1), Error);
  }
  SUBCASE("sides must match") {
    const Grid2D grid = Grid2D::uniform(0.0, 2.0 * M_PI, 0.0, 2.0 * M_PI, 16, 32, true, true);
    CHECK_THROWS_AS(ps_ns_solve(taylor_green_ic, grid, 0.01, 0.1), Error);
  }
  SUBCASE("viscosity cannot be negative") {
    CHECK_THROWS_AS(ps_ns_solve(taylor_green_ic, Grid2D::periodic_square(16), -0.01, 0.1), Error);
  }
}

TEST_CASE("a zero-horizon solve is the dealiased projection of the initial data") {
  const Grid2D grid = Grid2D::periodic_square(16);
  const SpectralState state = ps_ns_solve(taylor_green_ic, grid, 0.01, 0.0);
  CHECK(state.time == 0.0);
  const Field phys = state.physical_vorticity();
  CHECK(phys.layout() == Layout::Nodal);
  CHECK(phys.grid2().same_as(grid));
  const double dx = grid.dx();
  double worst = 0.0;
  for (int j = 0; j < 16; ++j) {
    for (int i = 0; i < 16; ++i) {
      const double v = phys.values()(j * 16 + i);
      worst = std::max(worst, std::abs(v - taylor_green_ic(i * dx, j * dx)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("spectral runs are bit-deterministic") {
  const Grid2D grid = Grid2D::periodic_square(32);
  const SpectralState a = ps_ns_solve(multi_mode_ic, grid, 0.003, 0.5);
  const SpectralState b = ps_ns_solve(multi_mode_ic, grid, 0.003, 0.5);
  REQUIRE(a.omega_hat.size() == b.omega_hat.size());
  bool identical = true;
  for (int k = 0; k < a.omega_hat.size(); ++k) {
    if (a.omega_hat(k) != b.omega_hat(k)) identical = false;
  }
  CHECK(identical);
  CHECK(a.time == b.time);
}

TEST_CASE("weak constant forcing grows vorticity linearly at early times") {
  const Grid2D grid = Grid2D::periodic_square(32);
  NsConfig cfg;
  cfg.forcing = [](double x, double) { return std::cos(x); };
  const double t = 0.01;
  const SpectralState state = ps_ns_solve([](double, double) { return 0.0; }, grid, 0.0, t, cfg);
  const auto linear = [t](double x, double) { return t * std::cos(x); };
  CHECK(compute_error(state.physical_vorticity(), Reference(std::function(linear)), Metric::RelL2) <
        1e-3);
}

TEST_SUITE_END();

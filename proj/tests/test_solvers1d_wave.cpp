#include <cmath>

#include "doctest.h"
#include "pbb/core/error_norms.hpp"
#include "pbb/core/rng.hpp"
#include "pbb/solvers1d/fv_wave.hpp"

using namespace pbb;

namespace {

// Mirrors the solver's gradient stencil: one-sided spans at the boundaries.
double discrete_energy(const Field& f, double c) {
  const Grid1D& g = f.grid1();
  const int n = g.n_cells();
  double e = 0.0;
  for (int i = 0; i < n; ++i) e += 0.5 * g.width(i) * f.at(i, 1) * f.at(i, 1);
  const double gl = (f.at(0, 0) - 0.0) / (g.center(0) - g.x_min());
  e += 0.5 * c * c * gl * gl * (g.center(0) - g.x_min());
  for (int i = 0; i + 1 < n; ++i) {
    const double span = g.center(i + 1) - g.center(i);
    const double gx = (f.at(i + 1, 0) - f.at(i, 0)) / span;
    e += 0.5 * c * c * gx * gx * span;
  }
  const double gr = (0.0 - f.at(n - 1, 0)) / (g.x_max() - g.center(n - 1));
  e += 0.5 * c * c * gr * gr * (g.x_max() - g.center(n - 1));
  return e;
}

Grid1D jittered_grid(int n, std::uint64_t seed) {
  Eigen::ArrayXd edges(n + 1);
  const CounterRng rng(seed);
  for (int i = 0; i <= n; ++i) {
    edges(i) = static_cast<double>(i) / n;
    if (i > 0 && i < n) edges(i) += 0.3 * (2.0 * rng.uniform(i) - 1.0) / n;
  }
  return Grid1D::from_edges(edges);
}

}  // namespace

TEST_SUITE_BEGIN("solvers1d");

TEST_CASE("wave solver keeps the null state at zero") {
  SolverConfig1D cfg;
  cfg.t_final = 0.5;
  cfg.boundary = BoundarySpec::dirichlet(0.0, 0.0);
  const Field u = fv_wave_solve(Grid1D::uniform(0.0, 1.0, 32), [](double) { return 0.0; },
                                [](double) { return 0.0; }, 1.0, cfg);
  CHECK(u.components() == 2);
  for (int i = 0; i < 32; ++i) {
    CHECK(u.at(i, 0) == 0.0);
    CHECK(u.at(i, 1) == 0.0);
  }
}

TEST_CASE("wave solver tracks the standing mode") {
  SolverConfig1D cfg;
  cfg.t_final = 0.7;
  cfg.boundary = BoundarySpec::dirichlet(0.0, 0.0);
  const double c = 1.0;
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 128);
  const Field u = fv_wave_solve(g, [](double x) { return std::sin(M_PI * x); },
                                [](double) { return 0.0; }, c, cfg);
  const Reference ru([=](double x) { return std::sin(M_PI * x) * std::cos(M_PI * c * 0.7); });
  const Reference rv(
      [=](double x) { return -M_PI * c * std::sin(M_PI * x) * std::sin(M_PI * c * 0.7); });
  CHECK(compute_error(u, ru, Metric::RelL2, 0) < 1e-2);
  CHECK(compute_error(u, rv, Metric::RelL2, 1) < 1e-2);
}

TEST_CASE("wave solver converges at second order on the standing mode") {
  double errs[3];
  const int ns[3] = {64, 128, 256};
  for (int k = 0; k < 3; ++k) {
    SolverConfig1D cfg;
    cfg.t_final = 0.7;
    cfg.boundary = BoundarySpec::dirichlet(0.0, 0.0);
    const Field u = fv_wave_solve(Grid1D::uniform(0.0, 1.0, ns[k]),
                                  [](double x) { return std::sin(M_PI * x); },
                                  [](double) { return 0.0; }, 1.0, cfg);
    errs[k] = compute_error(
        u, Reference([](double x) { return std::sin(M_PI * x) * std::cos(M_PI * 0.7); }),
        Metric::RelL2, 0);
  }
  const double order = 0.5 * (std::log2(errs[0] / errs[1]) + std::log2(errs[1] / errs[2]));
  CHECK(order == doctest::Approx(2.0).epsilon(0.3 / 2.0));
}

TEST_CASE("wave energy drifts below one percent over a period") {
  SolverConfig1D cfg;
  cfg.t_final = 2.0;
  cfg.boundary = BoundarySpec::dirichlet(0.0, 0.0);
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 256);
  const auto ic_u = [](double x) { return std::sin(M_PI * x); };
  const auto ic_v = [](double) { return 0.0; };
  SolverConfig1D cfg0 = cfg;
  cfg0.t_final = 0.0;
  const Field w0 = fv_wave_solve(g, ic_u, ic_v, 1.0, cfg0);
  const Field w1 = fv_wave_solve(g, ic_u, ic_v, 1.0, cfg);
  const double e0 = discrete_energy(w0, 1.0);
  const double e1 = discrete_energy(w1, 1.0);
  CHECK(std::abs(e1 - e0) / e0 < 0.01);
}

TEST_CASE("wave solver handles irregular spacing") {
  // t = 0.4 keeps cos(pi c t) away from zero so the relative norm is sane
  SolverConfig1D cfg;
  cfg.t_final = 0.4;
  cfg.boundary = BoundarySpec::dirichlet(0.0, 0.0);
  const Grid1D g = jittered_grid(96, 77);
  const Field u = fv_wave_solve(g, [](double x) { return std::sin(M_PI * x); },
                                [](double) { return 0.0; }, 1.0, cfg);
  const double err = compute_error(
      u, Reference([](double x) { return std::sin(M_PI * x) * std::cos(M_PI * 0.4); }),
      Metric::RelL2, 0);
  CHECK(err < 3e-2);
}

TEST_CASE("linear steady states survive nonzero dirichlet data exactly") {
  SolverConfig1D cfg;
  cfg.t_final = 1.0;
  cfg.boundary = BoundarySpec::dirichlet(0.0, 1.0);
  for (const bool irregular : {false, true}) {
    const Grid1D g = irregular ? jittered_grid(40, 5) : Grid1D::uniform(0.0, 1.0, 40);
    const Field u = fv_wave_solve(g, [](double x) { return x; }, [](double) { return 0.0; },
                                  2.0, cfg);
    for (int i = 0; i < 40; ++i) {
      CHECK(u.at(i, 0) == doctest::Approx(g.center(i)).epsilon(1e-12));
      CHECK(std::abs(u.at(i, 1)) < 1e-12);
    }
  }
}

TEST_CASE("wave solver requires dirichlet boundaries and a real wavespeed") {
  SolverConfig1D cfg;
  SUBCASE("periodic boundary") {
    try {
      fv_wave_solve(Grid1D::uniform(0.0, 1.0, 16), [](double) { return 0.0; },
                    [](double) { return 0.0; }, 1.0, cfg);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedBoundary);
    }
  }
  SUBCASE("zero wavespeed") {
    cfg.boundary = BoundarySpec::dirichlet(0.0, 0.0);
    cfg.t_final = 1.0;
    try {
      fv_wave_solve(Grid1D::uniform(0.0, 1.0, 16), [](double) { return 0.0; },
                    [](double) { return 0.0; }, 0.0, cfg);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroWaveSpeed);
    }
  }
}

TEST_SUITE_END();

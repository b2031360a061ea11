#include <cmath>

#include "doctest.h"
#include "pbb/core/rng.hpp"
#include "pbb/solvers1d/time_stepping.hpp"

using namespace pbb;

namespace {

Field scalar_state(double v) {
  Field f = Field::nodal(Grid1D::uniform(0.0, 1.0, 2));
  f.values().setConstant(v);
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("solvers1d");

TEST_CASE("one ssprk3 step on u' = -u matches the hand-expanded recursion") {
  // u1 = 0.9, u2 = 381/400, u3 = 1/3 + (2/3)(381/400)(9/10) = 5429/6000.
  // A third-order step reproduces the cubic Taylor polynomial of exp(-dt).
  const Field u0 = scalar_state(1.0);
  const auto rhs = [](const Field& u) {
    Field k = u;
    k.values() = -u.values();
    return k;
  };
  const Field u1 = ssprk3_step(u0, rhs, 0.1);
  CHECK(u1.values()(0) == doctest::Approx(5429.0 / 6000.0).epsilon(1e-14));
  const double gap = std::abs(u1.values()(0) - std::exp(-0.1));
  CHECK(gap > 3e-6);  // a genuinely third-order step leaves an O(dt^4) defect
  CHECK(gap < 5e-6);
}

TEST_CASE("zero spatial operator leaves the state unchanged") {
  Field u0 = scalar_state(0.0);
  u0.values()(0) = 2.5;
  u0.values()(1) = -1.0;
  const auto rhs = [](const Field& u) {
    Field k = u;
    k.values().setZero();
    return k;
  };
  const Field u1 = ssprk3_step(u0, rhs, 0.3);
  CHECK(u1.values()(0) == 2.5);
  CHECK(u1.values()(1) == -1.0);
}

TEST_CASE("ssprk3 converges at third order on u' = -u") {
  const auto rhs = [](const Field& u) {
    Field k = u;
    k.values() = -u.values();
    return k;
  };
  double errs[3];
  const double dts[3] = {0.1, 0.05, 0.025};
  for (int c = 0; c < 3; ++c) {
    Field u = scalar_state(1.0);
    const int steps = static_cast<int>(std::lround(1.0 / dts[c]));
    for (int s = 0; s < steps; ++s) u = ssprk3_step(u, rhs, dts[c]);
    errs[c] = std::abs(u.values()(0) - std::exp(-1.0));
  }
  const double order = 0.5 * (std::log2(errs[0] / errs[1]) + std::log2(errs[1] / errs[2]));
  CHECK(order == doctest::Approx(3.0).epsilon(0.1 / 3.0));
}

TEST_CASE("a NaN produced by any stage raises the instability error") {
  const Field u0 = scalar_state(1.0);
  const auto rhs = [](const Field& u) {
    Field k = u;
    k.values().setConstant(std::numeric_limits<double>::quiet_NaN());
    return k;
  };
  try {
    ssprk3_step(u0, rhs, 0.1);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnstableStep);
  }
}

TEST_CASE("step plans cover the horizon exactly") {
  SUBCASE("trailing partial step") {
    const TimeStepPlan p = plan_time_steps(0.0101, 0.005);
    CHECK(p.n_steps == 2);
    CHECK(p.dt == doctest::Approx(0.005));
    CHECK(p.partial == doctest::Approx(1e-4).epsilon(1e-9));
  }
  SUBCASE("horizon that is an exact multiple folds the partial away") {
    const TimeStepPlan p = plan_time_steps(1.0, 0.005);
    CHECK(p.n_steps == 200);
    CHECK(p.partial == 0.0);
  }
  SUBCASE("zero horizon takes no steps") {
    const TimeStepPlan p = plan_time_steps(0.0, 0.005);
    CHECK(p.n_steps == 0);
    CHECK(p.partial == 0.0);
  }
  SUBCASE("randomized horizons satisfy the coverage identity") {
    const CounterRng rng(314);
    for (int i = 0; i < 50; ++i) {
      const double t = 0.01 + 3.0 * rng.uniform(2 * i);
      const double dt = 0.001 + 0.05 * rng.uniform(2 * i + 1);
      const TimeStepPlan p = plan_time_steps(t, dt);
      CHECK(p.partial >= 0.0);
      CHECK(p.partial < p.dt * (1.0 + 1e-12));
      CHECK(p.n_steps * p.dt + p.partial == doctest::Approx(t).epsilon(1e-12));
    }
  }
}

TEST_CASE("cfl step size uses the scheme-dependent divisor") {
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 100);
  SUBCASE("finite volume") {
    const TimeStepPlan p = compute_dt(g, 1.0, 0.5, SchemeSpec::fv_godunov(), 1.0);
    CHECK(p.dt == doctest::Approx(0.005).epsilon(1e-14));
  }
  SUBCASE("discontinuous galerkin divides by 2p+1") {
    const TimeStepPlan p = compute_dt(g, 1.0, 0.5, SchemeSpec::dg(2), 1.0);
    CHECK(p.dt == doctest::Approx(0.001).epsilon(1e-14));
  }
  SUBCASE("zero wavespeed is rejected") {
    try {
      compute_dt(g, 0.0, 0.5, SchemeSpec::fd2(), 1.0);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ZeroWaveSpeed);
    }
  }
  SUBCASE("cfl factor must lie in (0,1]") {
    CHECK_THROWS_AS(compute_dt(g, 1.0, 0.0, SchemeSpec::fd2(), 1.0), Error);
    CHECK_THROWS_AS(compute_dt(g, 1.0, 1.5, SchemeSpec::fd2(), 1.0), Error);
  }
  SUBCASE("dg order is capped at 3") {
    CHECK_THROWS_AS(SchemeSpec::dg(4), Error);
    CHECK_THROWS_AS(SchemeSpec::dg(-1), Error);
  }
  SUBCASE("irregular grids use the narrowest cell") {
    Eigen::ArrayXd e(4);
    e << 0.0, 0.2, 0.3, 1.0;
    const TimeStepPlan p = compute_dt(Grid1D::from_edges(e), 2.0, 0.5, SchemeSpec::fv_wave(), 1.0);
    CHECK(p.dt == doctest::Approx(0.5 * 0.1 / 2.0).epsilon(1e-14));
  }
}

TEST_SUITE_END();

#include "doctest.h"
#include "pbb/core/grid.hpp"

using namespace pbb;

TEST_SUITE_BEGIN("core");

TEST_CASE("uniform grid splits the domain into equal cells") {
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 13);
  CHECK(g.n_cells() == 13);
  CHECK(g.x_min() == doctest::Approx(0.0));
  CHECK(g.x_max() == doctest::Approx(1.0));
  for (int i = 0; i < 13; ++i) CHECK(g.width(i) == doctest::Approx(1.0 / 13.0).epsilon(1e-14));
  CHECK(g.uniform_spacing());
  CHECK(g.min_width() == doctest::Approx(1.0 / 13.0));
  CHECK(g.center(0) == doctest::Approx(0.5 / 13.0));
}

TEST_CASE("irregular grid from explicit edges") {
  Eigen::ArrayXd edges(4);
  edges << 0.0, 0.1, 0.4, 1.0;
  const Grid1D g = Grid1D::from_edges(edges);
  CHECK(g.n_cells() == 3);
  CHECK_FALSE(g.uniform_spacing());
  CHECK(g.min_width() == doctest::Approx(0.1));
  CHECK(g.widths()(1) == doctest::Approx(0.3));
  CHECK(g.centers()(2) == doctest::Approx(0.7));
}

TEST_CASE("grid rejects non-monotone edges") {
  Eigen::ArrayXd edges(4);
  edges << 0.0, 0.5, 0.5, 1.0;
  CHECK_THROWS_AS(Grid1D::from_edges(edges), Error);
  try {
    Grid1D::from_edges(edges);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonMonotoneEdges);
  }
}

TEST_CASE("grid rejects degenerate domains") {
  try {
    Grid1D::uniform(1.0, 1.0, 4);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateDomain);
  }
}

TEST_CASE("grid equality is tolerant to roundoff only") {
  const Grid1D a = Grid1D::uniform(0.0, 1.0, 8);
  const Grid1D b = Grid1D::uniform(0.0, 1.0, 8);
  const Grid1D c = Grid1D::uniform(0.0, 2.0, 8);
  CHECK(a.same_as(b));
  CHECK_FALSE(a.same_as(c));
  CHECK_FALSE(a.same_as(Grid1D::uniform(0.0, 1.0, 16)));
}

TEST_CASE("2D grid spacing and flags") {
  const Grid2D g = Grid2D::uniform(0.0, 2.0, -1.0, 1.0, 10, 20, true, false);
  CHECK(g.dx() == doctest::Approx(0.2));
  CHECK(g.dy() == doctest::Approx(0.1));
  CHECK(g.periodic_x());
  CHECK_FALSE(g.periodic_y());
  const Grid2D s = Grid2D::periodic_square(16);
  CHECK(s.nx() == 16);
  CHECK(s.x_max() == doctest::Approx(2.0 * M_PI));
  CHECK(s.periodic_x());
  CHECK(s.periodic_y());
}

TEST_SUITE_END();

#include <cmath>

#include "doctest.h"
#include "pbb/core/error_norms.hpp"
#include "pbb/core/rng.hpp"

using namespace pbb;

namespace {

Field make_cells(const Grid1D& g, std::initializer_list<double> vals) {
  Field f = Field::cell_average(g);
  int i = 0;
  for (double v : vals) f.at(i++) = v;
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("relative L2 against a discrete reference matches hand quadrature") {
  // Four equal cells on [0,1], reference {1,2,3,4}, approx offset by +1/2.
  // sum w d^2 = 0.25, sum w r^2 = 7.5, so RelL2 = 0.5/sqrt(7.5).
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 4);
  const Field ref = make_cells(g, {1.0, 2.0, 3.0, 4.0});
  Field approx = make_cells(g, {1.5, 2.5, 3.5, 4.5});
  CHECK(compute_error(approx, Reference(ref), Metric::RelL2) ==
        doctest::Approx(0.5 / std::sqrt(7.5)).epsilon(1e-14));
  CHECK(compute_error(approx, Reference(ref), Metric::LInf) == doctest::Approx(0.5));
  CHECK(compute_error(approx, Reference(ref), Metric::MAE) == doctest::Approx(0.5));
  CHECK(compute_error(ref, Reference(ref), Metric::RelL2) == doctest::Approx(0.0));
}

TEST_CASE("relative L2 against an analytic constant matches hand quadrature") {
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 4);
  const Field approx = make_cells(g, {1.0, 2.0, 3.0, 4.0});
  const Reference ref([](double) { return 2.5; });
  CHECK(compute_error(approx, ref, Metric::RelL2) ==
        doctest::Approx(std::sqrt(0.2)).epsilon(1e-14));
  CHECK(compute_error(approx, ref, Metric::LInf) == doctest::Approx(1.5));
  CHECK(compute_error(approx, ref, Metric::MAE) == doctest::Approx(1.0));
}

TEST_CASE("LInf and MAE are symmetric, relative L2 is not") {
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 8);
  Field a = Field::cell_average(g);
  Field b = Field::cell_average(g);
  const CounterRng rng(99);
  for (int i = 0; i < 8; ++i) {
    a.at(i) = 1.0 + rng.uniform(2 * i);
    b.at(i) = 3.0 + rng.uniform(2 * i + 1);
  }
  CHECK(compute_error(a, Reference(b), Metric::LInf) ==
        doctest::Approx(compute_error(b, Reference(a), Metric::LInf)).epsilon(1e-15));
  CHECK(compute_error(a, Reference(b), Metric::MAE) ==
        doctest::Approx(compute_error(b, Reference(a), Metric::MAE)).epsilon(1e-15));
  CHECK(compute_error(a, Reference(b), Metric::RelL2) !=
        doctest::Approx(compute_error(b, Reference(a), Metric::RelL2)));
}

TEST_CASE("relative L2 refuses a zero reference") {
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 4);
  const Field zero = Field::cell_average(g);
  const Field one = make_cells(g, {1.0, 1.0, 1.0, 1.0});
  try {
    compute_error(one, Reference(zero), Metric::RelL2);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroReferenceNorm);
  }
  // absolute metrics are still defined
  CHECK(compute_error(one, Reference(zero), Metric::LInf) == doctest::Approx(1.0));
}

TEST_CASE("modal DG quadrature reproduces an exactly representable polynomial") {
  // f(x) = x on two cells of [0,1]: x = center + (width/2) xi, so the means
  // are {1/4, 3/4} and the P1 coefficient is width/2 = 1/4 in both cells.
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 2);
  Field dg = Field::modal_dg(g, 1);
  dg.coeff(0, 0) = 0.25;
  dg.coeff(0, 1) = 0.25;
  dg.coeff(1, 0) = 0.75;
  dg.coeff(1, 1) = 0.25;
  const Reference ident([](double x) { return x; });
  CHECK(compute_error(dg, ident, Metric::RelL2) < 1e-14);
  CHECK(compute_error(dg, ident, Metric::LInf) < 1e-14);
  const Field means = dg.to_cell_averages();
  CHECK(means.at(0) == doctest::Approx(0.25));
  CHECK(means.at(1) == doctest::Approx(0.75));
}

TEST_CASE("uniform restriction averages pairs of cells") {
  const Grid1D fine = Grid1D::uniform(0.0, 1.0, 4);
  const Grid1D coarse = Grid1D::uniform(0.0, 1.0, 2);
  const Field f = make_cells(fine, {1.0, 3.0, 5.0, 7.0});
  const Field r = restrict_field(f, coarse);
  CHECK(r.at(0) == doctest::Approx(2.0));
  CHECK(r.at(1) == doctest::Approx(6.0));
  CHECK(r.integral() == doctest::Approx(f.integral()).epsilon(1e-14));
}

TEST_CASE("irregular nested restriction is width weighted and conservative") {
  Eigen::ArrayXd fe(6), ce(3);
  fe << 0.0, 0.1, 0.25, 0.5, 0.8, 1.0;
  ce << 0.0, 0.25, 1.0;
  const Field f = make_cells(Grid1D::from_edges(fe), {2.0, -1.0, 3.0, 0.5, 4.0});
  const Grid1D coarse = Grid1D::from_edges(ce);
  // Nesting is edge based, so 5 fine cells may map onto 2 uneven coarse cells.
  const Field r = restrict_field(f, coarse);
  CHECK(r.at(0) == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(r.at(1) == doctest::Approx(1.7 / 0.75).epsilon(1e-13));
  CHECK(r.integral() == doctest::Approx(f.integral()).epsilon(1e-13));
}

TEST_CASE("nodal restriction keeps center nodes exactly") {
  const Grid1D fine = Grid1D::uniform(0.0, 1.0, 6);
  Field f = Field::nodal(fine);
  for (int i = 0; i < 6; ++i) f.values()(i) = 10.0 + i;
  const Field r3 = restrict_field(f, Grid1D::uniform(0.0, 1.0, 2));
  CHECK(r3.at(0) == doctest::Approx(11.0));
  CHECK(r3.at(1) == doctest::Approx(14.0));

  const Grid1D fine4 = Grid1D::uniform(0.0, 1.0, 4);
  Field g = Field::nodal(fine4);
  for (int i = 0; i < 4; ++i) g.values()(i) = 1.0 + i;
  const Field r2 = restrict_field(g, Grid1D::uniform(0.0, 1.0, 2));
  CHECK(r2.at(0) == doctest::Approx(1.5));
  CHECK(r2.at(1) == doctest::Approx(3.5));
}

TEST_CASE("restriction of exact sine averages reproduces coarse averages") {
  const auto exact_mean = [](double a, double b) {
    return (std::cos(2.0 * M_PI * a) - std::cos(2.0 * M_PI * b)) / (2.0 * M_PI * (b - a));
  };
  const Grid1D fine = Grid1D::uniform(0.0, 1.0, 256);
  Field f = Field::cell_average(fine);
  for (int i = 0; i < 256; ++i) f.at(i) = exact_mean(fine.edge(i), fine.edge(i + 1));
  const Grid1D coarse = Grid1D::uniform(0.0, 1.0, 64);
  const Field r = restrict_field(f, coarse);
  for (int j = 0; j < 64; ++j)
    CHECK(r.at(j) == doctest::Approx(exact_mean(coarse.edge(j), coarse.edge(j + 1))).epsilon(1e-12));
  // coarse averages sit within midpoint quadrature error of the analytic curve
  const double err = compute_error(r, Reference([](double x) { return std::sin(2.0 * M_PI * x); }),
                                   Metric::RelL2);
  CHECK(err < 1e-3);
}

TEST_CASE("restriction rejects grids that do not nest") {
  const Grid1D fine = Grid1D::uniform(0.0, 1.0, 6);
  Field f = Field::cell_average(fine);
  try {
    restrict_field(f, Grid1D::uniform(0.0, 1.0, 4));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonNestedGrids);
  }
  try {
    restrict_field(f, Grid1D::uniform(0.0, 2.0, 3));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonNestedGrids);
  }
}

TEST_CASE("a discrete reference must be at least as fine as the approximation") {
  const Field coarse_ref = Field::cell_average(Grid1D::uniform(0.0, 1.0, 4));
  Field approx = Field::cell_average(Grid1D::uniform(0.0, 1.0, 8));
  try {
    compute_error(approx, Reference(coarse_ref), Metric::LInf);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleGrids);
  }
}

TEST_CASE("2D block restriction averages each patch") {
  const Grid2D fine = Grid2D::uniform(0.0, 1.0, 0.0, 1.0, 4, 4, true, true);
  Field f = Field::cell_average2d(fine);
  for (int i = 0; i < 16; ++i) f.at(i) = 1.0 + i;
  const Field r = restrict_field(f, Grid2D::uniform(0.0, 1.0, 0.0, 1.0, 2, 2, true, true));
  CHECK(r.at(0) == doctest::Approx(3.5));
  CHECK(r.at(1) == doctest::Approx(5.5));
  CHECK(r.at(2) == doctest::Approx(11.5));
  CHECK(r.at(3) == doctest::Approx(13.5));
}

TEST_CASE("2D nodal restriction subsamples the shared lattice exactly") {
  const Grid2D fine = Grid2D::periodic_square(32);
  Field f = Field::nodal2d(fine);
  for (int j = 0; j < 32; ++j)
    for (int i = 0; i < 32; ++i)
      f.at(j * 32 + i) = std::cos(fine.x_min() + i * fine.dx()) *
                         std::cos(fine.y_min() + j * fine.dy());
  const Field r = restrict_field(f, Grid2D::periodic_square(16));
  const Reference ref([](double x, double y) { return std::cos(x) * std::cos(y); });
  CHECK(compute_error(r, ref, Metric::LInf) < 1e-14);
}

TEST_CASE("integral and total variation on simple sequences") {
  const Grid1D g = Grid1D::uniform(0.0, 1.0, 3);
  const Field f = make_cells(g, {1.0, 3.0, 2.0});
  CHECK(f.integral() == doctest::Approx(2.0));
  CHECK(f.total_variation() == doctest::Approx(4.0));  // 2 + 1 + periodic 1
}

TEST_SUITE_END();

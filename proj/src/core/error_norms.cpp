#include "pbb/core/error_norms.hpp"

#include <cmath>
#include <vector>

#include "pbb/core/errors.hpp"
#include "pbb/core/quadrature.hpp"

namespace pbb {

const char* to_string(Metric metric) {
  switch (metric) {
    case Metric::RelL2: return "RelL2";
    case Metric::LInf: return "LInf";
    case Metric::MAE: return "MAE";
  }
  return "Unknown";
}

namespace {

struct Accumulator {
  double wd2 = 0.0;   // sum w * (a - r)^2
  double wr2 = 0.0;   // sum w * r^2
  double wad = 0.0;   // sum w * |a - r|
  double w = 0.0;     // sum w
  double linf = 0.0;  // max |a - r|

  void add(double weight, double approx, double ref) {
    const double d = approx - ref;
    wd2 += weight * d * d;
    wr2 += weight * ref * ref;
    wad += weight * std::abs(d);
    w += weight;
    linf = std::max(linf, std::abs(d));
  }

  double result(Metric metric) const {
    switch (metric) {
      case Metric::RelL2: {
        require(wr2 > 0.0, ErrorCode::ZeroReferenceNorm,
                "relative L2 undefined against a zero reference");
        return std::sqrt(wd2) / std::sqrt(wr2);
      }
      case Metric::LInf: return linf;
      case Metric::MAE: return wad / w;
    }
    return 0.0;
  }
};

// Evaluate a modal DG cell polynomial at reference coordinate xi in [-1, 1].
double dg_eval(const Field& f, int cell, int component, double xi) {
  double u = 0.0;
  for (int k = 0; k <= f.dg_order(); ++k) u += f.coeff(cell, k, component) * legendre(k, xi);
  return u;
}

// Index of the fine edge matching x, or -1.
int find_edge(const Grid1D& fine, double x, double tol) {
  // binary search over the sorted edge array
  const Eigen::ArrayXd& e = fine.edges();
  int lo = 0, hi = static_cast<int>(e.size()) - 1;
  while (lo <= hi) {
    const int mid = (lo + hi) / 2;
    if (std::abs(e(mid) - x) <= tol) return mid;
    if (e(mid) < x)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return -1;
}

Field restrict_1d(const Field& fine, const Grid1D& coarse) {
  const Grid1D& fg = fine.grid1();
  require(fg.n_cells() > coarse.n_cells(), ErrorCode::NonNestedGrids,
          "restriction target must be strictly coarser");
  const double tol = 1e-12 * (fg.length() + std::abs(fg.x_min()) + std::abs(fg.x_max()));
  require(std::abs(fg.x_min() - coarse.x_min()) <= tol &&
              std::abs(fg.x_max() - coarse.x_max()) <= tol,
          ErrorCode::NonNestedGrids, "grids cover different domains");

  // Each coarse edge must coincide with a fine edge.
  std::vector<int> split(coarse.n_cells() + 1);
  for (int j = 0; j <= coarse.n_cells(); ++j) {
    const int idx = find_edge(fg, coarse.edge(j), tol);
    require(idx >= 0, ErrorCode::NonNestedGrids, "coarse edge does not lie on the fine grid");
    split[j] = idx;
  }

  const bool nodal = fine.layout() == Layout::Nodal;
  const Field source = nodal ? fine : fine.to_cell_averages();
  Field out = nodal ? Field::nodal(coarse) : Field::cell_average(coarse, fine.components());

  for (int c = 0; c < out.components(); ++c) {
    for (int j = 0; j < coarse.n_cells(); ++j) {
      const int a = split[j], b = split[j + 1];
      if (nodal) {
        // subsample the node(s) at the center of the covered run
        const int count = b - a;
        if (count % 2 == 1)
          out.at(j, c) = source.at(a + count / 2, c);
        else
          out.at(j, c) = 0.5 * (source.at(a + count / 2 - 1, c) + source.at(a + count / 2, c));
      } else {
        double sum = 0.0, wsum = 0.0;
        for (int i = a; i < b; ++i) {
          sum += source.at(i, c) * fg.width(i);
          wsum += fg.width(i);
        }
        out.at(j, c) = sum / wsum;
      }
    }
  }
  return out;
}

Field restrict_2d(const Field& fine, const Grid2D& coarse) {
  const Grid2D& fg = fine.grid2();
  require(fg.nx() % coarse.nx() == 0 && fg.ny() % coarse.ny() == 0, ErrorCode::NonNestedGrids,
          "fine resolution must be an integer multiple of coarse resolution");
  require(fg.x_min() == coarse.x_min() && fg.x_max() == coarse.x_max() &&
              fg.y_min() == coarse.y_min() && fg.y_max() == coarse.y_max(),
          ErrorCode::NonNestedGrids, "grids cover different domains");
  const int rx = fg.nx() / coarse.nx(), ry = fg.ny() / coarse.ny();

  if (fine.layout() == Layout::Nodal) {
    // lattice nodes align exactly under integer refinement
    Field out = Field::nodal2d(coarse);
    for (int j = 0; j < coarse.ny(); ++j)
      for (int i = 0; i < coarse.nx(); ++i)
        out.at(j * coarse.nx() + i) = fine.at(j * ry * fg.nx() + i * rx);
    return out;
  }

  Field out = Field::cell_average2d(coarse);
  for (int j = 0; j < coarse.ny(); ++j)
    for (int i = 0; i < coarse.nx(); ++i) {
      double sum = 0.0;
      for (int jj = 0; jj < ry; ++jj)
        for (int ii = 0; ii < rx; ++ii)
          sum += fine.at((j * ry + jj) * fg.nx() + (i * rx + ii));
      out.at(j * coarse.nx() + i) = sum / (rx * ry);
    }
  return out;
}

}  // namespace

Field restrict_field(const Field& fine, const Grid1D& coarse) {
  require(fine.dim() == 1, ErrorCode::IncompatibleGrids, "restriction target must match field dimension");
  require(fine.layout() != Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "transform spectral fields to physical space before restriction");
  return restrict_1d(fine, coarse);
}

Field restrict_field(const Field& fine, const Grid2D& coarse) {
  require(fine.dim() == 2, ErrorCode::IncompatibleGrids, "restriction target must match field dimension");
  require(fine.layout() != Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "transform spectral fields to physical space before restriction");
  return restrict_2d(fine, coarse);
}

double compute_error(const Field& approx, const Reference& reference, Metric metric,
                     int component) {
  require(approx.layout() != Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "transform spectral fields to physical space before computing errors");
  Accumulator acc;

  if (!reference.analytic()) {
    const Field& rf = reference.field();
    require(rf.dim() == approx.dim(), ErrorCode::IncompatibleGrids,
            "approx and reference dimensions differ");
    // Bring the reference onto the approx grid, then compare cell means.
    Field ref_on_grid = [&] {
      if (approx.dim() == 1) {
        if (rf.grid1().same_as(approx.grid1())) return rf.to_cell_averages();
        require(rf.grid1().n_cells() > approx.grid1().n_cells(), ErrorCode::IncompatibleGrids,
                "discrete reference must live on the same grid or a finer nested grid");
        return restrict_field(rf, approx.grid1()).to_cell_averages();
      }
      if (rf.grid2().same_as(approx.grid2())) return rf.to_cell_averages();
      require(rf.grid2().nx() > approx.grid2().nx() || rf.grid2().ny() > approx.grid2().ny(),
              ErrorCode::IncompatibleGrids,
              "discrete reference must live on the same grid or a finer nested grid");
      return restrict_field(rf, approx.grid2()).to_cell_averages();
    }();

    const Field a = approx.to_cell_averages();
    if (approx.dim() == 1) {
      const Grid1D& g = a.grid1();
      for (int i = 0; i < g.n_cells(); ++i)
        acc.add(g.width(i), a.at(i, component), ref_on_grid.at(i, component));
    } else {
      const Grid2D& g = a.grid2();
      const double w = g.dx() * g.dy();
      for (int i = 0; i < a.cells(); ++i)
        acc.add(w, a.at(i, component), ref_on_grid.at(i, component));
    }
    return acc.result(metric);
  }

  // analytic reference
  require(reference.dim() == approx.dim(), ErrorCode::IncompatibleGrids,
          "approx and reference dimensions differ");
  if (approx.dim() == 2) {
    const Grid2D& g = approx.grid2();
    const double w = g.dx() * g.dy();
    const bool lattice = approx.layout() == Layout::Nodal;
    for (int j = 0; j < g.ny(); ++j)
      for (int i = 0; i < g.nx(); ++i) {
        const double x = g.x_min() + (lattice ? i * g.dx() : (i + 0.5) * g.dx());
        const double y = g.y_min() + (lattice ? j * g.dy() : (j + 0.5) * g.dy());
        acc.add(w, approx.at(j * g.nx() + i, component), reference.eval(x, y));
      }
    return acc.result(metric);
  }

  const Grid1D& g = approx.grid1();
  if (approx.layout() == Layout::ModalDG) {
    const GaussLegendre& q = gauss_legendre(approx.dg_order() + 2);
    for (int i = 0; i < g.n_cells(); ++i) {
      const double xc = g.center(i), half = 0.5 * g.width(i);
      for (int p = 0; p < q.nodes.size(); ++p) {
        const double xi = q.nodes(p);
        acc.add(q.weights(p) * half, dg_eval(approx, i, component, xi),
                reference.eval(xc + half * xi));
      }
    }
  } else {
    for (int i = 0; i < g.n_cells(); ++i)
      acc.add(g.width(i), approx.at(i, component), reference.eval(g.center(i)));
  }
  return acc.result(metric);
}

}  // namespace pbb

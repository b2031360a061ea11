#include "pbb/solvers2d/poisson.hpp"

#include <vector>

namespace pbb {

const char* to_string(PoissonBc bc) {
  return bc == PoissonBc::Dirichlet ? "dirichlet" : "periodic";
}

namespace {

// Recursive bisection of the index rectangle [i0,i1) x [j0,j1): both halves
// first, the separating grid line last, blocks of <= 16 nodes kept natural.
void dissect(int i0, int i1, int j0, int j1, int stride, std::vector<int>& out) {
  const int w = i1 - i0;
  const int h = j1 - j0;
  if (w <= 0 || h <= 0) return;
  if (w * h <= 16) {
    for (int j = j0; j < j1; ++j) {
      for (int i = i0; i < i1; ++i) out.push_back(j * stride + i);
    }
    return;
  }
  if (w >= h) {
    const int mid = i0 + w / 2;
    dissect(i0, mid, j0, j1, stride, out);
    dissect(mid + 1, i1, j0, j1, stride, out);
    for (int j = j0; j < j1; ++j) out.push_back(j * stride + mid);
  } else {
    const int mid = j0 + h / 2;
    dissect(i0, i1, j0, mid, stride, out);
    dissect(i0, i1, mid + 1, j1, stride, out);
    for (int i = i0; i < i1; ++i) out.push_back(mid * stride + i);
  }
}

// Local bilinear stiffness: tensor product of the 1D linear-element
// stiffness (1/h)[[1,-1],[-1,1]] and mass (h/6)[[2,1],[1,2]] blocks.
void local_stiffness(double dx, double dy, double k[4][4]) {
  const double kx[2][2] = {{1.0 / dx, -1.0 / dx}, {-1.0 / dx, 1.0 / dx}};
  const double mx[2][2] = {{dx / 3.0, dx / 6.0}, {dx / 6.0, dx / 3.0}};
  const double ky[2][2] = {{1.0 / dy, -1.0 / dy}, {-1.0 / dy, 1.0 / dy}};
  const double my[2][2] = {{dy / 3.0, dy / 6.0}, {dy / 6.0, dy / 3.0}};
  for (int a = 0; a < 4; ++a) {
    const int ax = a & 1, ay = a >> 1;
    for (int b = 0; b < 4; ++b) {
      const int bx = b & 1, by = b >> 1;
      k[a][b] = kx[ax][bx] * my[ay][by] + mx[ax][bx] * ky[ay][by];
    }
  }
}

}  // namespace

int poisson_unknowns(const Grid2D& grid, PoissonBc bc) {
  if (bc == PoissonBc::Dirichlet) return (grid.nx() - 1) * (grid.ny() - 1);
  return grid.nx() * grid.ny();
}

Eigen::Vector2d poisson_node(const Grid2D& grid, PoissonBc bc, int k) {
  require(k >= 0 && k < poisson_unknowns(grid, bc), ErrorCode::InvalidArgument,
          "unknown index out of range");
  if (bc == PoissonBc::Dirichlet) {
    const int w = grid.nx() - 1;
    const int i = k % w + 1;
    const int j = k / w + 1;
    return {grid.x_min() + i * grid.dx(), grid.y_min() + j * grid.dy()};
  }
  const int i = k % grid.nx();
  const int j = k / grid.nx();
  return {grid.x_min() + i * grid.dx(), grid.y_min() + j * grid.dy()};
}

SparseSystem assemble_poisson(const Grid2D& grid, PoissonBc bc,
                              const std::function<double(double, double)>& f) {
  require(static_cast<bool>(f), ErrorCode::InvalidArgument, "source term is required");
  require(grid.nx() >= 2 && grid.ny() >= 2, ErrorCode::InvalidArgument,
          "poisson assembly needs at least two cells per side");
  if (bc == PoissonBc::Periodic) {
    require(grid.periodic_x() && grid.periodic_y(), ErrorCode::UnsupportedBoundary,
            "periodic assembly needs a grid periodic on both axes");
  }

  const int nx = grid.nx();
  const int ny = grid.ny();
  const double dx = grid.dx();
  const double dy = grid.dy();
  double k_local[4][4];
  local_stiffness(dx, dy, k_local);

  // Unknown index of node (i, j), or -1 for an eliminated boundary node.
  const auto unknown = [&](int i, int j) -> int {
    if (bc == PoissonBc::Dirichlet) {
      if (i <= 0 || i >= nx || j <= 0 || j >= ny) return -1;
      return (j - 1) * (nx - 1) + (i - 1);
    }
    return (j % ny) * nx + (i % nx);
  };

  const int n = poisson_unknowns(grid, bc);
  std::vector<SparseTriplet> triplets;
  triplets.reserve(9 * static_cast<std::size_t>(n));
  for (int cy = 0; cy < ny; ++cy) {
    for (int cx = 0; cx < nx; ++cx) {
      int node[4];
      for (int l = 0; l < 4; ++l) node[l] = unknown(cx + (l & 1), cy + (l >> 1));
      for (int a = 0; a < 4; ++a) {
        if (node[a] < 0) continue;
        for (int b = 0; b < 4; ++b) {
          if (node[b] < 0) continue;
          triplets.push_back({node[a], node[b], k_local[a][b]});
        }
      }
    }
  }

  Eigen::VectorXd rhs(n);
  for (int k = 0; k < n; ++k) {
    const Eigen::Vector2d p = poisson_node(grid, bc, k);
    rhs(k) = f(p.x(), p.y()) * dx * dy;
  }

  if (bc == PoissonBc::Periodic) {
    rhs.array() -= rhs.mean();
    std::vector<SparseTriplet> pinned;
    pinned.reserve(triplets.size());
    for (const SparseTriplet& t : triplets) {
      if (t.row != 0 && t.col != 0) pinned.push_back(t);
    }
    pinned.push_back({0, 0, 1.0});
    triplets.swap(pinned);
    rhs(0) = 0.0;
  }

  SparseSystem sys = SparseSystem::from_triplets(n, triplets, std::move(rhs));

  if (bc == PoissonBc::Dirichlet) {
    std::vector<int> order;
    order.reserve(n);
    dissect(0, nx - 1, 0, ny - 1, nx - 1, order);
    sys.elimination_order = Eigen::Map<Eigen::VectorXi>(order.data(), order.size());
  }
  return sys;
}

}  // namespace pbb

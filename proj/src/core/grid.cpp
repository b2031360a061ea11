#include "pbb/core/grid.hpp"

#include <cmath>
#include <utility>

namespace pbb {

Grid1D::Grid1D(Eigen::ArrayXd edges) : edges_(std::move(edges)) {
  require(edges_.size() >= 3, ErrorCode::InvalidArgument,
          "grid needs at least 2 cells (3 edges), got " + std::to_string(edges_.size()) +
              " edges");
  require(x_min() < x_max(), ErrorCode::DegenerateDomain, "domain has zero or negative extent");
  const int n = n_cells();
  double wmin = width(0), wmax = width(0);
  for (int i = 0; i < n; ++i) {
    const double w = width(i);
    require(w > 0.0, ErrorCode::NonMonotoneEdges,
            "edges must be strictly increasing (cell " + std::to_string(i) + ")");
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  min_width_ = wmin;
  uniform_ = (wmax - wmin) <= 1e-12 * wmax;
}

Grid1D Grid1D::uniform(double x_min, double x_max, int n_cells) {
  require(n_cells >= 2, ErrorCode::InvalidArgument, "need at least 2 cells");
  require(x_min < x_max, ErrorCode::DegenerateDomain, "domain has zero or negative extent");
  Eigen::ArrayXd edges(n_cells + 1);
  for (int i = 0; i <= n_cells; ++i)
    edges(i) = x_min + (x_max - x_min) * (static_cast<double>(i) / n_cells);
  edges(n_cells) = x_max;
  return Grid1D(std::move(edges));
}

Grid1D Grid1D::from_edges(Eigen::ArrayXd edges) { return Grid1D(std::move(edges)); }

Eigen::ArrayXd Grid1D::widths() const {
  const int n = n_cells();
  return edges_.tail(n) - edges_.head(n);
}

Eigen::ArrayXd Grid1D::centers() const {
  const int n = n_cells();
  return 0.5 * (edges_.tail(n) + edges_.head(n));
}

bool Grid1D::same_as(const Grid1D& other) const {
  if (n_cells() != other.n_cells()) return false;
  const double scale = std::max(std::abs(x_min()), std::abs(x_max())) + length();
  return ((edges_ - other.edges_).abs() <= 1e-12 * scale).all();
}

Grid2D Grid2D::uniform(double x_min, double x_max, double y_min, double y_max, int nx, int ny,
                       bool periodic_x, bool periodic_y) {
  require(nx >= 2 && ny >= 2, ErrorCode::InvalidArgument, "need at least 2 cells per axis");
  require(x_min < x_max && y_min < y_max, ErrorCode::DegenerateDomain,
          "domain has zero or negative extent");
  Grid2D g;
  g.x0_ = x_min;
  g.x1_ = x_max;
  g.y0_ = y_min;
  g.y1_ = y_max;
  g.nx_ = nx;
  g.ny_ = ny;
  g.per_x_ = periodic_x;
  g.per_y_ = periodic_y;
  return g;
}

Grid2D Grid2D::periodic_square(int n) {
  const double two_pi = 2.0 * M_PI;
  return uniform(0.0, two_pi, 0.0, two_pi, n, n, true, true);
}

bool Grid2D::same_as(const Grid2D& other) const {
  return nx_ == other.nx_ && ny_ == other.ny_ && per_x_ == other.per_x_ &&
         per_y_ == other.per_y_ && x0_ == other.x0_ && x1_ == other.x1_ && y0_ == other.y0_ &&
         y1_ == other.y1_;
}

}  // namespace pbb

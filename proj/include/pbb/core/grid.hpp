#pragma once

/// @file
/// @brief 1D interval grids (possibly irregular) and uniform 2D rectangle grids.

#include <Eigen/Core>

#include "pbb/core/errors.hpp"

namespace pbb {

/// Cell-based 1D grid described by its n+1 edge coordinates.
class Grid1D {
 public:
  static Grid1D uniform(double x_min, double x_max, int n_cells);

  /// Irregular grid from an explicit, strictly increasing edge list.
  static Grid1D from_edges(Eigen::ArrayXd edges);

  int n_cells() const { return static_cast<int>(edges_.size()) - 1; }
  double x_min() const { return edges_(0); }
  double x_max() const { return edges_(edges_.size() - 1); }
  double length() const { return x_max() - x_min(); }

  const Eigen::ArrayXd& edges() const { return edges_; }
  double edge(int i) const { return edges_(i); }
  double width(int i) const { return edges_(i + 1) - edges_(i); }
  double center(int i) const { return 0.5 * (edges_(i) + edges_(i + 1)); }
  double min_width() const { return min_width_; }

  Eigen::ArrayXd widths() const;
  Eigen::ArrayXd centers() const;

  /// True when all cells share the same width to 1e-12 relative tolerance.
  bool uniform_spacing() const { return uniform_; }

  bool same_as(const Grid1D& other) const;

 private:
  explicit Grid1D(Eigen::ArrayXd edges);

  Eigen::ArrayXd edges_;
  double min_width_ = 0.0;
  bool uniform_ = false;
};

/// Uniform axis-aligned rectangle grid with per-axis periodicity flags.
class Grid2D {
 public:
  static Grid2D uniform(double x_min, double x_max, double y_min, double y_max, int nx, int ny,
                        bool periodic_x = false, bool periodic_y = false);

  /// Convenience: periodic square [0, 2*pi)^2 with n cells per side.
  static Grid2D periodic_square(int n);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double x_min() const { return x0_; }
  double x_max() const { return x1_; }
  double y_min() const { return y0_; }
  double y_max() const { return y1_; }
  bool periodic_x() const { return per_x_; }
  bool periodic_y() const { return per_y_; }

  double dx() const { return (x1_ - x0_) / nx_; }
  double dy() const { return (y1_ - y0_) / ny_; }

  bool same_as(const Grid2D& other) const;

 private:
  Grid2D() = default;

  double x0_ = 0, x1_ = 1, y0_ = 0, y1_ = 1;
  int nx_ = 0, ny_ = 0;
  bool per_x_ = false, per_y_ = false;
};

}  // namespace pbb

#pragma once

/// @file
/// @brief Discrete fields: dof storage tagged with layout, grid, and component count.
///
/// Dof ordering is component-major, then cell-major:
///   dof[c * cells * basis + i * basis + k]
/// where `basis` is p+1 for ModalDG and 1 otherwise. 2D grids are flattened
/// x-fastest: flat cell index = j * nx + i.
///
/// Node conventions: 1D Nodal fields sample cell centers; 2D Nodal fields
/// sample the periodic collocation lattice (x_min + i*dx, y_min + j*dy).

#include <Eigen/Core>
#include <variant>

#include "pbb/core/grid.hpp"

namespace pbb {

enum class Layout { CellAverage, ModalDG, Nodal, SpectralComplex };

const char* to_string(Layout layout);

class Field {
 public:
  static Field cell_average(Grid1D grid, int components = 1);
  static Field modal_dg(Grid1D grid, int order);
  static Field nodal(Grid1D grid);
  static Field cell_average2d(Grid2D grid);
  static Field nodal2d(Grid2D grid);
  static Field spectral2d(Grid2D grid);

  Layout layout() const { return layout_; }
  int dg_order() const { return order_; }
  int components() const { return components_; }
  int dim() const { return std::holds_alternative<Grid1D>(grid_) ? 1 : 2; }
  bool is_spectral() const { return layout_ == Layout::SpectralComplex; }

  const Grid1D& grid1() const;
  const Grid2D& grid2() const;

  /// Number of cells (1D) or nx*ny (2D).
  int cells() const;
  /// Values per cell per component: p+1 for ModalDG, otherwise 1.
  int basis() const { return layout_ == Layout::ModalDG ? order_ + 1 : 1; }

  Eigen::ArrayXd& values();
  const Eigen::ArrayXd& values() const;
  Eigen::ArrayXcd& cvalues();
  const Eigen::ArrayXcd& cvalues() const;

  double at(int cell, int component = 0) const {
    return real_(component * cells() * basis() + cell * basis());
  }
  double& at(int cell, int component = 0) {
    return real_(component * cells() * basis() + cell * basis());
  }
  double coeff(int cell, int k, int component = 0) const {
    return real_(component * cells() * basis() + cell * basis() + k);
  }
  double& coeff(int cell, int k, int component = 0) {
    return real_(component * cells() * basis() + cell * basis() + k);
  }

  /// One component's dof block as an Eigen view.
  Eigen::Map<const Eigen::ArrayXd> component(int c) const;
  Eigen::Map<Eigen::ArrayXd> component(int c);

  /// Domain integral of one component. Exact for CellAverage and ModalDG
  /// (the mean coefficient carries the cell integral); midpoint for Nodal.
  double integral(int component = 0) const;

  /// Total variation of the cell mean sequence (1D layouts).
  double total_variation(int component = 0) const;

  /// Collapse to per-cell means on the same grid. ModalDG keeps only the mean
  /// coefficient; Nodal values are reinterpreted as the cell value. Spectral
  /// fields must be transformed to physical space first.
  Field to_cell_averages() const;

 private:
  Field() = default;

  Layout layout_ = Layout::CellAverage;
  int order_ = 0;
  int components_ = 1;
  std::variant<Grid1D, Grid2D> grid_ = Grid1D::uniform(0.0, 1.0, 2);
  Eigen::ArrayXd real_;
  Eigen::ArrayXcd complex_;
};

}  // namespace pbb

#include "pbb/core/field.hpp"

#include <cmath>
#include <utility>

#include "pbb/core/errors.hpp"

namespace pbb {

const char* to_string(Layout layout) {
  switch (layout) {
    case Layout::CellAverage: return "CellAverage";
    case Layout::ModalDG: return "ModalDG";
    case Layout::Nodal: return "Nodal";
    case Layout::SpectralComplex: return "SpectralComplex";
  }
  return "Unknown";
}

Field Field::cell_average(Grid1D grid, int components) {
  require(components >= 1, ErrorCode::InvalidArgument, "components must be positive");
  Field f;
  f.layout_ = Layout::CellAverage;
  f.components_ = components;
  f.real_ = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(components) * grid.n_cells());
  f.grid_ = std::move(grid);
  return f;
}

Field Field::modal_dg(Grid1D grid, int order) {
  require(order >= 0 && order <= 3, ErrorCode::InvalidArgument, "DG order must be in 0..3");
  Field f;
  f.layout_ = Layout::ModalDG;
  f.order_ = order;
  f.real_ = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(grid.n_cells()) * (order + 1));
  f.grid_ = std::move(grid);
  return f;
}

Field Field::nodal(Grid1D grid) {
  Field f;
  f.layout_ = Layout::Nodal;
  f.real_ = Eigen::ArrayXd::Zero(grid.n_cells());
  f.grid_ = std::move(grid);
  return f;
}

Field Field::cell_average2d(Grid2D grid) {
  Field f;
  f.layout_ = Layout::CellAverage;
  f.real_ = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(grid.nx()) * grid.ny());
  f.grid_ = grid;
  return f;
}

Field Field::nodal2d(Grid2D grid) {
  Field f;
  f.layout_ = Layout::Nodal;
  f.real_ = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(grid.nx()) * grid.ny());
  f.grid_ = grid;
  return f;
}

Field Field::spectral2d(Grid2D grid) {
  Field f;
  f.layout_ = Layout::SpectralComplex;
  f.complex_ = Eigen::ArrayXcd::Zero(static_cast<Eigen::Index>(grid.nx()) * grid.ny());
  f.grid_ = grid;
  return f;
}

const Grid1D& Field::grid1() const {
  require(dim() == 1, ErrorCode::IncompatibleGrids, "field is not 1D");
  return std::get<Grid1D>(grid_);
}

const Grid2D& Field::grid2() const {
  require(dim() == 2, ErrorCode::IncompatibleGrids, "field is not 2D");
  return std::get<Grid2D>(grid_);
}

int Field::cells() const {
  if (dim() == 1) return std::get<Grid1D>(grid_).n_cells();
  const Grid2D& g = std::get<Grid2D>(grid_);
  return g.nx() * g.ny();
}

Eigen::ArrayXd& Field::values() {
  require(layout_ != Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "spectral fields store complex dof; use cvalues()");
  return real_;
}

const Eigen::ArrayXd& Field::values() const {
  require(layout_ != Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "spectral fields store complex dof; use cvalues()");
  return real_;
}

Eigen::ArrayXcd& Field::cvalues() {
  require(layout_ == Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "only spectral fields store complex dof");
  return complex_;
}

const Eigen::ArrayXcd& Field::cvalues() const {
  require(layout_ == Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "only spectral fields store complex dof");
  return complex_;
}

Eigen::Map<const Eigen::ArrayXd> Field::component(int c) const {
  const Eigen::Index block = static_cast<Eigen::Index>(cells()) * basis();
  return {real_.data() + c * block, block};
}

Eigen::Map<Eigen::ArrayXd> Field::component(int c) {
  const Eigen::Index block = static_cast<Eigen::Index>(cells()) * basis();
  return {real_.data() + c * block, block};
}

double Field::integral(int component) const {
  require(layout_ != Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "integral of a spectral field is its k=0 mode");
  double sum = 0.0;
  if (dim() == 1) {
    const Grid1D& g = std::get<Grid1D>(grid_);
    for (int i = 0; i < g.n_cells(); ++i) sum += at(i, component) * g.width(i);
  } else {
    const Grid2D& g = std::get<Grid2D>(grid_);
    const double w = g.dx() * g.dy();
    for (int i = 0; i < cells(); ++i) sum += at(i, component) * w;
  }
  return sum;
}

double Field::total_variation(int component) const {
  require(dim() == 1, ErrorCode::InvalidArgument, "total variation is defined for 1D fields");
  const int n = cells();
  double tv = 0.0;
  for (int i = 0; i + 1 < n; ++i)
    tv += std::abs(at(i + 1, component) - at(i, component));
  // periodic closure keeps TV comparable across boundary-crossing features
  tv += std::abs(at(0, component) - at(n - 1, component));
  return tv;
}

Field Field::to_cell_averages() const {
  require(layout_ != Layout::SpectralComplex, ErrorCode::InvalidArgument,
          "transform spectral fields to physical space first");
  Field out;
  if (dim() == 1)
    out = cell_average(std::get<Grid1D>(grid_), components_);
  else
    out = cell_average2d(std::get<Grid2D>(grid_));
  for (int c = 0; c < components_; ++c)
    for (int i = 0; i < cells(); ++i) out.at(i, c) = at(i, c);  // mean coefficient / value
  return out;
}

}  // namespace pbb

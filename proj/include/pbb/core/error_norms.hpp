#pragma once

/// @file
/// @brief Error metrics against analytic or discrete references, and
/// conservative fine-to-coarse restriction.

#include <functional>
#include <optional>

#include "pbb/core/field.hpp"

namespace pbb {

enum class Metric { RelL2, LInf, MAE };

const char* to_string(Metric metric);

/// Reference side of an error computation: a closed-form function or a field
/// on the same grid or on a nested finer grid.
class Reference {
 public:
  Reference(std::function<double(double)> f) : f1_(std::move(f)) {}
  Reference(std::function<double(double, double)> f) : f2_(std::move(f)) {}
  Reference(Field field) : field_(std::move(field)) {}

  bool analytic() const { return !field_.has_value(); }
  int dim() const { return f2_ ? 2 : (f1_ ? 1 : field_->dim()); }
  const Field& field() const { return *field_; }
  double eval(double x) const { return f1_(x); }
  double eval(double x, double y) const { return f2_(x, y); }

 private:
  std::function<double(double)> f1_;
  std::function<double(double, double)> f2_;
  std::optional<Field> field_;
};

/// Weighted error between an approximate field and a reference.
///
/// Quadrature follows the approx layout: midpoint (cell centers / nodes) for
/// CellAverage and Nodal, per-cell (p+2)-point Gauss-Legendre for ModalDG
/// against analytic references. Discrete references are restricted to the
/// approx grid first and compared through cell means.
///
/// RelL2 is normalized by the reference norm; LInf and MAE are absolute and
/// symmetric under swapping approx and reference.
double compute_error(const Field& approx, const Reference& reference, Metric metric,
                     int component = 0);

/// Conservative averaging (CellAverage, ModalDG means) or nodal subsampling
/// (Nodal) onto a nested coarser grid. Preserves the domain integral of
/// cell-average data to roundoff.
Field restrict_field(const Field& fine, const Grid1D& coarse);
Field restrict_field(const Field& fine, const Grid2D& coarse);

}  // namespace pbb

#pragma once

/// @file
/// @brief Gauss-Legendre rules on [-1, 1], computed once and cached.

#include <Eigen/Core>

namespace pbb {

struct GaussLegendre {
  Eigen::ArrayXd nodes;    // ascending in (-1, 1)
  Eigen::ArrayXd weights;  // sum to 2
};

/// Rule with `npoints` nodes, exact for polynomials up to degree 2*npoints - 1.
const GaussLegendre& gauss_legendre(int npoints);

/// Legendre polynomial P_n and its derivative at x (recurrence evaluation).
double legendre(int n, double x);
double legendre_derivative(int n, double x);

}  // namespace pbb

#pragma once

/// @file
/// @brief Continuous-Galerkin Poisson assembly on uniform rectangle grids.

#include <Eigen/Core>
#include <functional>

#include "pbb/core/grid.hpp"
#include "pbb/solvers2d/sparse_system.hpp"

namespace pbb {

enum class PoissonBc { Dirichlet, Periodic };

const char* to_string(PoissonBc bc);

/// Assembles the bilinear-element stiffness system for -laplace(u) = f.
///
/// Dirichlet: homogeneous boundary data, unknowns are the interior nodes in
/// x-fastest order. Periodic: one unknown per node; the constant nullspace is
/// removed by subtracting the rhs mean and symmetrically pinning unknown 0 to
/// zero. The rhs uses nodal quadrature, f(node) * dx * dy.
///
/// Dirichlet systems carry a geometric nested-dissection elimination order
/// for the direct solver; periodic systems leave the order to the backend.
SparseSystem assemble_poisson(const Grid2D& grid, PoissonBc bc,
                              const std::function<double(double, double)>& f);

/// Number of unknowns the assembly produces for the given grid and boundary.
int poisson_unknowns(const Grid2D& grid, PoissonBc bc);

/// Physical coordinates of unknown k in the assembly's ordering.
Eigen::Vector2d poisson_node(const Grid2D& grid, PoissonBc bc, int k);

}  // namespace pbb

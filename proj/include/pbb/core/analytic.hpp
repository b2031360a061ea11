#pragma once

/// @file
/// @brief Closed-form reference solutions shared by solvers and tests.

#include <functional>

namespace pbb {

/// Exact solution of u_t + c u_x = 0 on a periodic interval: the initial
/// profile translated by c*t with wraparound into [x_min, x_max).
std::function<double(double)> advect_exact(std::function<double(double)> ic, double x_min,
                                           double x_max, double speed, double t);

/// Taylor-Green vortex vorticity on [0, 2 pi]^2:
/// omega(x, y, t) = 2 cos(x) cos(y) exp(-2 nu t).
double taylor_green_vorticity(double x, double y, double t, double nu);

}  // namespace pbb

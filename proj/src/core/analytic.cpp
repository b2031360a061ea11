#include "pbb/core/analytic.hpp"

#include <cmath>
#include <utility>

#include "pbb/core/errors.hpp"

namespace pbb {

std::function<double(double)> advect_exact(std::function<double(double)> ic, double x_min,
                                           double x_max, double speed, double t) {
  require(x_min < x_max, ErrorCode::DegenerateDomain, "domain has zero or negative extent");
  const double length = x_max - x_min;
  const double shift = speed * t;
  return [ic = std::move(ic), x_min, length, shift](double x) {
    double xi = x - shift;
    xi = xi - length * std::floor((xi - x_min) / length);
    return ic(xi);
  };
}

double taylor_green_vorticity(double x, double y, double t, double nu) {
  return 2.0 * std::cos(x) * std::cos(y) * std::exp(-2.0 * nu * t);
}

}  // namespace pbb

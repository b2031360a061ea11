#include "pbb/core/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "pbb/core/errors.hpp"

namespace pbb {

double legendre(int n, double x) {
  if (n == 0) return 1.0;
  if (n == 1) return x;
  double pm2 = 1.0, pm1 = x, p = x;
  for (int k = 2; k <= n; ++k) {
    p = ((2.0 * k - 1.0) * x * pm1 - (k - 1.0) * pm2) / k;
    pm2 = pm1;
    pm1 = p;
  }
  return p;
}

double legendre_derivative(int n, double x) {
  if (n == 0) return 0.0;
  // (1-x^2) P_n'(x) = n (P_{n-1}(x) - x P_n(x)); endpoints handled exactly.
  if (std::abs(std::abs(x) - 1.0) < 1e-14) {
    const double sign = (x > 0 || n % 2 == 1) ? 1.0 : -1.0;
    return sign * 0.5 * n * (n + 1.0);
  }
  return n * (legendre(n - 1, x) - x * legendre(n, x)) / (1.0 - x * x);
}

static GaussLegendre compute_rule(int npoints) {
  GaussLegendre rule;
  rule.nodes.resize(npoints);
  rule.weights.resize(npoints);
  for (int i = 0; i < npoints; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = -std::cos(M_PI * (i + 0.75) / (npoints + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double f = legendre(npoints, x);
      const double df = legendre_derivative(npoints, x);
      const double dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double dp = legendre_derivative(npoints, x);
    rule.nodes(i) = x;
    rule.weights(i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendre& gauss_legendre(int npoints) {
  require(npoints >= 1 && npoints <= 64, ErrorCode::InvalidArgument,
          "quadrature order out of range");
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(npoints);
  if (it == cache.end()) it = cache.emplace(npoints, compute_rule(npoints)).first;
  return it->second;
}

}  // namespace pbb

#include "pbb/bench/match.hpp"

#include <cmath>

#include "pbb/core/errors.hpp"

namespace pbb {

namespace {

struct Interpolated {
  ParetoPoint lo, hi;
  double value = 0.0;
};

// Position t of `target` between a and b on a log scale, then the log-linear
// blend of the paired coordinate.
double log_blend(double target, double a, double b, double pa, double pb) {
  const double t = (std::log(target) - std::log(a)) / (std::log(b) - std::log(a));
  return std::exp(std::log(pa) + t * (std::log(pb) - std::log(pa)));
}

Interpolated cost_at_error(const ParetoFront& front, double target) {
  const std::vector<ParetoPoint>& pts = front.points;
  require(target <= pts.front().error && target >= pts.back().error, ErrorCode::Extrapolation,
          "target error lies outside the measured span of front '" + front.solver_id + "'");
  for (const ParetoPoint& p : pts) {
    if (p.error == target) return {p, p, p.cost_s};
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].error > target && target > pts[i + 1].error) {
      return {pts[i], pts[i + 1],
              log_blend(target, pts[i].error, pts[i + 1].error, pts[i].cost_s, pts[i + 1].cost_s)};
    }
  }
  fail(ErrorCode::Extrapolation, "target error not bracketed by front '" + front.solver_id + "'");
}

Interpolated error_at_cost(const ParetoFront& front, double target) {
  const std::vector<ParetoPoint>& pts = front.points;
  require(target >= pts.front().cost_s && target <= pts.back().cost_s, ErrorCode::Extrapolation,
          "target cost lies outside the measured span of front '" + front.solver_id + "'");
  for (const ParetoPoint& p : pts) {
    if (p.cost_s == target) return {p, p, p.error};
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].cost_s < target && target < pts[i + 1].cost_s) {
      return {pts[i], pts[i + 1],
              log_blend(target, pts[i].cost_s, pts[i + 1].cost_s, pts[i].error, pts[i + 1].error)};
    }
  }
  fail(ErrorCode::Extrapolation, "target cost not bracketed by front '" + front.solver_id + "'");
}

}  // namespace

EqualAccuracyReport match_equal_accuracy(const ParetoFront& front_a, const ParetoFront& front_b,
                                         double target_error) {
  validate_front(front_a);
  validate_front(front_b);
  require(target_error > 0.0 && std::isfinite(target_error), ErrorCode::InvalidArgument,
          "target error must be positive and finite");
  const Interpolated a = cost_at_error(front_a, target_error);
  const Interpolated b = cost_at_error(front_b, target_error);
  EqualAccuracyReport report;
  report.target_error = target_error;
  report.cost_a_s = a.value;
  report.cost_b_s = b.value;
  report.speedup = a.value / b.value;
  report.bracket_a_lo = a.lo;
  report.bracket_a_hi = a.hi;
  report.bracket_b_lo = b.lo;
  report.bracket_b_hi = b.hi;
  return report;
}

EqualRuntimeReport match_equal_runtime(const ParetoFront& front_a, const ParetoFront& front_b,
                                       double target_cost_s) {
  validate_front(front_a);
  validate_front(front_b);
  require(target_cost_s > 0.0 && std::isfinite(target_cost_s), ErrorCode::InvalidArgument,
          "target cost must be positive and finite");
  const Interpolated a = error_at_cost(front_a, target_cost_s);
  const Interpolated b = error_at_cost(front_b, target_cost_s);
  EqualRuntimeReport report;
  report.target_cost_s = target_cost_s;
  report.error_a = a.value;
  report.error_b = b.value;
  report.accuracy_ratio = a.value / b.value;
  report.bracket_a_lo = a.lo;
  report.bracket_a_hi = a.hi;
  report.bracket_b_lo = b.lo;
  report.bracket_b_hi = b.hi;
  return report;
}

}  // namespace pbb

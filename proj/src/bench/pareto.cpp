#include "pbb/bench/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>

#include "pbb/core/errors.hpp"

namespace pbb {

ParetoFront build_pareto_front(const std::string& solver_id, std::vector<ParetoPoint> points) {
  require(!points.empty(), ErrorCode::InvalidArgument, "a front needs at least one point");
  for (const ParetoPoint& p : points) {
    require(std::isfinite(p.cost_s) && std::isfinite(p.error), ErrorCode::InvalidArgument,
            "front points must be finite");
  }

  // Sort indices by (cost, error, input position); a single sweep then finds
  // the non-dominated points, with later exact duplicates counting as
  // dominated.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].cost_s != points[b].cost_s) return points[a].cost_s < points[b].cost_s;
    if (points[a].error != points[b].error) return points[a].error < points[b].error;
    return a < b;
  });

  std::vector<bool> on_front(points.size(), false);
  double best_error = std::numeric_limits<double>::infinity();
  ParetoFront front;
  front.solver_id = solver_id;
  for (std::size_t idx : order) {
    if (points[idx].error < best_error) {
      on_front[idx] = true;
      best_error = points[idx].error;
      front.points.push_back(points[idx]);
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!on_front[i]) front.dominated.push_back(points[i]);
  }
  return front;
}

ParetoFront build_pareto_front(const std::vector<BenchRecord>& records) {
  require(!records.empty(), ErrorCode::InvalidArgument, "a front needs at least one record");
  std::vector<ParetoPoint> points;
  for (const BenchRecord& r : records) {
    require(r.solver_id == records.front().solver_id && r.pde_id == records.front().pde_id,
            ErrorCode::MixedSolverIds, "all records on one front must share solver and pde ids");
    points.push_back({r.runtime.median_s, r.error_l2});
  }
  return build_pareto_front(records.front().solver_id, std::move(points));
}

void validate_front(const ParetoFront& front) {
  require(!front.points.empty(), ErrorCode::InvalidArgument, "front has no points");
  for (const ParetoPoint& p : front.points) {
    require(p.cost_s > 0.0 && std::isfinite(p.cost_s) && p.error > 0.0 && std::isfinite(p.error),
            ErrorCode::InvalidArgument, "front points need positive finite cost and error");
  }
  for (std::size_t i = 1; i < front.points.size(); ++i) {
    require(front.points[i].cost_s > front.points[i - 1].cost_s &&
                front.points[i].error < front.points[i - 1].error,
            ErrorCode::InvalidArgument,
            "front must be sorted with strictly increasing cost and decreasing error");
  }
}

void write_front_csv(const ParetoFront& front, const std::string& path,
                     const std::string& config_digest, const std::string& tool_version) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::IoFailure, "could not write " + path);
  if (!config_digest.empty()) out << "# config_digest=" << config_digest << "\n";
  if (!tool_version.empty()) out << "# tool_version=" << tool_version << "\n";
  out << "cost_s,error\n";
  for (const ParetoPoint& p : front.points) {
    char row[80];
    std::snprintf(row, sizeof row, "%.17g,%.17g\n", p.cost_s, p.error);
    out << row;
  }
  require(static_cast<bool>(out), ErrorCode::IoFailure, "could not write " + path);
}

}  // namespace pbb

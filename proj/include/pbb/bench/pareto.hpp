#pragma once

/// @file
/// @brief Cost-accuracy Pareto fronts with dominated points kept for
/// reporting.

#include <string>
#include <vector>

#include "pbb/bench/record.hpp"

namespace pbb {

struct ParetoPoint {
  double cost_s = 0.0;
  double error = 0.0;
};

/// Non-dominated points sorted by cost; along the front cost strictly
/// increases and error strictly decreases. Dominated inputs are retained
/// separately so reports can show the full sweep.
struct ParetoFront {
  std::string solver_id;
  std::vector<ParetoPoint> points;
  std::vector<ParetoPoint> dominated;
};

/// Domination filter under (min cost, min error). Exact duplicate points
/// collapse to a single front entry.
ParetoFront build_pareto_front(const std::string& solver_id, std::vector<ParetoPoint> points);

/// Front from records: cost is the runtime median, error the relative L2.
/// All records must share one solver id and one PDE id.
ParetoFront build_pareto_front(const std::vector<BenchRecord>& records);

/// Two-column CSV (cost_s, error) of the front points, for plotting.
/// Nonempty metadata is embedded as leading comment lines (# key=value).
void write_front_csv(const ParetoFront& front, const std::string& path,
                     const std::string& config_digest = "", const std::string& tool_version = "");

/// Raises InvalidArgument unless `front.points` is nonempty, every point has
/// positive finite cost and error, and the sequence is strictly monotone
/// (cost up, error down).
void validate_front(const ParetoFront& front);

}  // namespace pbb

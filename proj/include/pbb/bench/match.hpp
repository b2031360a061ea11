#pragma once

/// @file
/// @brief Equal-accuracy and equal-runtime comparisons between two Pareto
/// fronts, interpolating linearly in log-log coordinates.

#include "pbb/bench/pareto.hpp"

namespace pbb {

/// Costs of both solvers at one shared error level, with the bracketing
/// front points that anchored each interpolation.
struct EqualAccuracyReport {
  double target_error = 0.0;
  double cost_a_s = 0.0;
  double cost_b_s = 0.0;
  double speedup = 0.0;  // cost_a_s / cost_b_s; > 1 favors solver B
  ParetoPoint bracket_a_lo, bracket_a_hi;
  ParetoPoint bracket_b_lo, bracket_b_hi;
};

/// Errors of both solvers at one shared cost level.
struct EqualRuntimeReport {
  double target_cost_s = 0.0;
  double error_a = 0.0;
  double error_b = 0.0;
  double accuracy_ratio = 0.0;  // error_a / error_b; > 1 favors solver B
  ParetoPoint bracket_a_lo, bracket_a_hi;
  ParetoPoint bracket_b_lo, bracket_b_hi;
};

/// The target must lie inside the error span of both fronts, otherwise
/// Extrapolation is raised: a speedup claimed at an accuracy the baseline
/// never reached is exactly the comparison this refuses to make.
EqualAccuracyReport match_equal_accuracy(const ParetoFront& front_a, const ParetoFront& front_b,
                                         double target_error);

/// Mirror image with the roles of cost and error exchanged.
EqualRuntimeReport match_equal_runtime(const ParetoFront& front_a, const ParetoFront& front_b,
                                       double target_cost_s);

}  // namespace pbb

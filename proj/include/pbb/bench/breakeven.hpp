#pragma once

/// @file
/// @brief Break-even evaluation count for an amortized surrogate against a
/// baseline solver.

namespace pbb {

/// Amortization inputs: one-off data and training cost, baseline seconds per
/// evaluation at matched accuracy, and the per-evaluation speedup.
struct BreakEvenInputs {
  double c_data_s = 0.0;
  double c_train_s = 0.0;
  double t_b_s = 0.0;
  double s = 0.0;
};

/// N = (C_data + C_train) / (t_B (1 - 1/s)): the evaluation count where the
/// surrogate's total cost equals the baseline's. Requires s > 1 (NotFaster
/// otherwise) and t_B > 0 (ZeroBaselineTime).
double breakeven_n(const BreakEvenInputs& inputs);

}  // namespace pbb

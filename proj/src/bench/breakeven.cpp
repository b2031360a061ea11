#include "pbb/bench/breakeven.hpp"

#include <cmath>

#include "pbb/core/errors.hpp"

namespace pbb {

double breakeven_n(const BreakEvenInputs& inputs) {
  require(std::isfinite(inputs.c_data_s) && inputs.c_data_s >= 0.0, ErrorCode::InvalidArgument,
          "data cost must be finite and non-negative");
  require(std::isfinite(inputs.c_train_s) && inputs.c_train_s >= 0.0, ErrorCode::InvalidArgument,
          "training cost must be finite and non-negative");
  require(std::isfinite(inputs.t_b_s) && inputs.t_b_s >= 0.0, ErrorCode::InvalidArgument,
          "baseline time must be finite and non-negative");
  require(inputs.t_b_s > 0.0, ErrorCode::ZeroBaselineTime,
          "baseline time per evaluation must be positive");
  require(std::isfinite(inputs.s), ErrorCode::InvalidArgument, "speedup must be finite");
  require(inputs.s > 1.0, ErrorCode::NotFaster,
          "a surrogate that is not faster per evaluation never breaks even");
  return (inputs.c_data_s + inputs.c_train_s) / (inputs.t_b_s * (1.0 - 1.0 / inputs.s));
}

}  // namespace pbb

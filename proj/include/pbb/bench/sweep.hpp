#pragma once

/// @file
/// @brief Cost-accuracy sweeps: run one solver family over a resolution
/// list, timing each solve and scoring it against a reference.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pbb/bench/record.hpp"
#include "pbb/core/error_norms.hpp"

namespace pbb {

/// One solver family. `run` performs the full solve at a resolution and is
/// the timed region (setup included); `dof` maps resolution to unknown
/// count and defaults to the resolution itself.
struct SweepCase {
  std::string solver_id;
  std::string pde_id;
  std::function<Field(int)> run;
  std::function<long(int)> dof;
};

struct SweepOptions {
  int repeats = 5;
  int warmups = 1;
  /// Workers for independent resolutions; timed regions stay exclusive.
  /// Capped by PBB_THREADS when that is set.
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string config_digest = "unconfigured";
  std::string prng;
};

/// One record per resolution, in input order. Timing covers the solve only;
/// reference evaluation and error computation stay outside the clock. A
/// discrete reference must be at least 8x finer than the largest swept
/// resolution (ReferenceTooCoarse otherwise).
std::vector<BenchRecord> sweep_cost_accuracy(const SweepCase& family,
                                             const std::vector<int>& resolutions,
                                             const Reference& reference,
                                             const SweepOptions& options = {});

}  // namespace pbb

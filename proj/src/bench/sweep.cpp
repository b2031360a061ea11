#include "pbb/bench/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <mutex>
#include <optional>

#include "pbb/bench/timing.hpp"
#include "pbb/core/errors.hpp"

namespace pbb {

namespace {

int reference_resolution(const Reference& reference) {
  const Field& f = reference.field();
  return f.dim() == 1 ? f.grid1().n_cells() : std::max(f.grid2().nx(), f.grid2().ny());
}

}  // namespace

std::vector<BenchRecord> sweep_cost_accuracy(const SweepCase& family,
                                             const std::vector<int>& resolutions,
                                             const Reference& reference,
                                             const SweepOptions& options) {
  require(!family.solver_id.empty() && !family.pde_id.empty(), ErrorCode::InvalidArgument,
          "a sweep case needs solver and pde ids");
  require(static_cast<bool>(family.run), ErrorCode::InvalidArgument,
          "a sweep case needs a run function");
  require(!resolutions.empty(), ErrorCode::InvalidArgument, "a sweep needs at least one resolution");
  for (int n : resolutions) {
    require(n > 0, ErrorCode::InvalidArgument, "resolutions must be positive");
  }
  require(options.repeats >= 1, ErrorCode::InvalidArgument, "repeats must be at least 1");
  require(options.warmups >= 0, ErrorCode::InvalidArgument, "warmups must be non-negative");
  require(options.jobs >= 1, ErrorCode::InvalidArgument, "jobs must be at least 1");

  if (!reference.analytic()) {
    const int finest = *std::max_element(resolutions.begin(), resolutions.end());
    require(reference_resolution(reference) >= 8 * finest, ErrorCode::ReferenceTooCoarse,
            "a discrete reference must be at least 8x finer than the finest swept resolution");
  }

  // Timed regions execute under one mutex so pooled runs never share the
  // machine with another measurement; errors are scored outside the lock.
  std::mutex timing_mutex;
  const auto run_one = [&](int n) {
    BenchRecord record;
    record.solver_id = family.solver_id;
    record.pde_id = family.pde_id;
    record.dof = family.dof ? family.dof(n) : n;
    record.config_digest = options.config_digest;
    record.seed = options.seed;
    record.prng = options.prng;
    std::optional<Field> result;
    {
      const std::lock_guard<std::mutex> lock(timing_mutex);
      record.runtime = time_operation([&] { result.emplace(family.run(n)); }, options.repeats,
                                      options.warmups);
    }
    record.error_l2 = compute_error(*result, reference, Metric::RelL2);
    record.error_linf = compute_error(*result, reference, Metric::LInf);
    record.error_mae = compute_error(*result, reference, Metric::MAE);
    record.timestamp = iso_utc_timestamp();
    return record;
  };

  int jobs = options.jobs;
  if (std::getenv("PBB_THREADS") != nullptr) jobs = std::min(jobs, env_thread_count());

  std::vector<BenchRecord> records;
  records.reserve(resolutions.size());
  if (jobs == 1) {
    for (int n : resolutions) records.push_back(run_one(n));
    return records;
  }
  for (std::size_t start = 0; start < resolutions.size(); start += static_cast<std::size_t>(jobs)) {
    const std::size_t stop =
        std::min(start + static_cast<std::size_t>(jobs), resolutions.size());
    std::vector<std::future<BenchRecord>> wave;
    for (std::size_t i = start; i < stop; ++i) {
      wave.push_back(std::async(std::launch::async, run_one, resolutions[i]));
    }
    for (auto& f : wave) records.push_back(f.get());
  }
  return records;
}

}  // namespace pbb

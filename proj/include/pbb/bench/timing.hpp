#pragma once

/// @file
/// @brief Wall-clock measurement with warmups, robust summary statistics, and
/// environment metadata.

#include <functional>
#include <string>

namespace pbb {

/// Summary of one timed measurement series. Published records require
/// repeats >= 5; the timer itself accepts any positive count.
struct RuntimeStats {
  double median_s = 0.0;
  double iqr_s = 0.0;
  int repeats = 0;
  int warmups = 0;
  std::string hardware;
  int threads = 1;
};

/// Run `op` warmups times unrecorded, then `repeats` times recorded, and
/// summarize the recorded wall times. Median and interquartile range use
/// linear interpolation between order statistics. The operation should be
/// deterministic so the repeats measure the same work.
///
/// `clock` returns seconds on a monotonic scale and exists so tests can
/// script readings; the default reads std::chrono::steady_clock.
RuntimeStats time_operation(const std::function<void()>& op, int repeats, int warmups,
                            const std::function<double()>& clock = {});

/// CPU model plus logical core count, read once from the machine.
std::string hardware_descriptor();

/// Worker cap from PBB_THREADS, defaulting to 1.
int env_thread_count();

}  // namespace pbb

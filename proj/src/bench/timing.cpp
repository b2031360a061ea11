#include "pbb/bench/timing.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>
#include <vector>

#include "pbb/core/errors.hpp"

namespace pbb {

namespace {

double steady_seconds() {
  const auto now = std::chrono::steady_clock::now().time_since_epoch();
  return std::chrono::duration<double>(now).count();
}

// Linear interpolation between order statistics (the common spreadsheet rule).
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

}  // namespace

RuntimeStats time_operation(const std::function<void()>& op, int repeats, int warmups,
                            const std::function<double()>& clock) {
  require(static_cast<bool>(op), ErrorCode::InvalidArgument, "an operation is required");
  require(repeats >= 1, ErrorCode::InvalidArgument, "repeats must be at least 1");
  require(warmups >= 0, ErrorCode::InvalidArgument, "warmups cannot be negative");
  const std::function<double()> now = clock ? clock : std::function<double()>(steady_seconds);

  for (int i = 0; i < warmups; ++i) op();

  std::vector<double> durations(static_cast<std::size_t>(repeats));
  for (int i = 0; i < repeats; ++i) {
    const double t0 = now();
    op();
    const double t1 = now();
    durations[static_cast<std::size_t>(i)] = t1 - t0;
    require(t1 - t0 > 0.0, ErrorCode::NonPositiveDuration,
            "clock did not advance across the operation");
  }
  std::sort(durations.begin(), durations.end());

  RuntimeStats stats;
  stats.median_s = quantile(durations, 0.5);
  stats.iqr_s = quantile(durations, 0.75) - quantile(durations, 0.25);
  stats.repeats = repeats;
  stats.warmups = warmups;
  stats.hardware = hardware_descriptor();
  stats.threads = env_thread_count();
  return stats;
}

std::string hardware_descriptor() {
  static const std::string cached = [] {
    std::string model = "unknown cpu";
    std::ifstream in("/proc/cpuinfo");
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("model name", 0) == 0) {
        const std::size_t colon = line.find(':');
        if (colon != std::string::npos) {
          model = line.substr(colon + 1);
          const std::size_t first = model.find_first_not_of(" \t");
          model = first == std::string::npos ? "unknown cpu" : model.substr(first);
        }
        break;
      }
    }
    const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
    return model + ", " + std::to_string(cores) + " logical cores";
  }();
  return cached;
}

int env_thread_count() {
  const char* env = std::getenv("PBB_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1) return 1;
  return static_cast<int>(value);
}

}  // namespace pbb

#pragma once

/// @file
/// @brief The flat run configuration shared by every subcommand, with a
/// content digest that names output files and stamps emitted records.

#include <cstdint>
#include <string>

namespace pbb {

/// One reproducible run: problem, solver, discretization, seeded initial
/// condition, and the timing protocol. Loaded from a flat JSON file, then
/// overridden by flags (flags > file > defaults).
struct RunConfig {
  std::string pde = "advection";
  std::string solver = "fd2";
  int n = 100;

  std::string ic_kind = "sum_of_sines";
  std::uint64_t seed = 0;
  int modes = 3;
  double amp_min = 0.2;
  double amp_max = 1.0;
  int k_min = 1;
  int k_max = 3;
  double mean = 0.0;
  double bump_center = 0.5;
  double bump_width = 0.1;

  double t_final = 1.0;
  double cfl_factor = 0.5;
  double speed = 1.0;
  double viscosity = 0.01;
  double tol = 1e-10;
  double limiter_m = 20.0;

  int repeats = 5;
  int warmups = 1;

  /// Plumbing, deliberately outside the digest: where files land and how
  /// sweep workers pool never change what a run computes.
  int jobs = 1;
  std::string out_dir = ".";
};

/// Sorted key=value lines over every digest-relevant field; doubles printed
/// with %.17g so the digest is exact.
std::string canonical_config_string(const RunConfig& config);

/// FNV-1a 64-bit hash of the canonical string, as 16 hex digits. Stable
/// across key reordering in the source JSON by construction.
std::string config_digest(const RunConfig& config);

/// Reads a flat JSON object over `base`; keys present in the file override
/// the base, unknown keys are rejected.
RunConfig run_config_from_json_file(const std::string& path, const RunConfig& base = {});

}  // namespace pbb

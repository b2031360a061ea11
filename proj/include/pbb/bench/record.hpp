#pragma once

/// @file
/// @brief The benchmark record: one solver at one resolution, with runtime,
/// errors, and provenance, serialized under stable JSON field names.

#include <cstdint>
#include <string>
#include <vector>

#include "pbb/bench/timing.hpp"

namespace pbb {

struct BenchRecord {
  std::string solver_id;
  std::string pde_id;
  long dof = 0;
  std::string config_digest;
  RuntimeStats runtime;
  double error_l2 = 0.0;
  double error_linf = 0.0;
  double error_mae = 0.0;
  std::uint64_t seed = 0;
  std::string timestamp;
  std::string prng;
};

/// Serialize one record. Publishing enforces the record invariants
/// (nonempty ids, positive dof and median, repeats >= 5).
std::string to_json_string(const BenchRecord& record);

/// Parse one record object. Structural problems raise InvalidRecord;
/// foreign records with fewer repeats than our publishing floor are accepted.
BenchRecord record_from_json_string(const std::string& text);

/// Record files hold a JSON array of record objects.
void write_records_json(const std::vector<BenchRecord>& records, const std::string& path);
std::vector<BenchRecord> read_records_json(const std::string& path);

/// Current time as ISO 8601 UTC, e.g. "2026-08-22T12:00:00Z".
std::string iso_utc_timestamp();

}  // namespace pbb

#include "pbb/bench/record.hpp"

#include <ctime>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pbb/core/errors.hpp"
#include "pbb/version.hpp"

namespace pbb {

namespace {

using Json = nlohmann::ordered_json;

Json record_to_json(const BenchRecord& r) {
  require(!r.solver_id.empty() && !r.pde_id.empty(), ErrorCode::InvalidRecord,
          "a published record needs solver and pde ids");
  require(r.dof > 0, ErrorCode::InvalidRecord, "a published record needs a positive dof count");
  require(r.runtime.median_s > 0.0, ErrorCode::InvalidRecord,
          "a published record needs a positive runtime median");
  require(r.runtime.repeats >= 5, ErrorCode::InvalidRecord,
          "a published record needs at least 5 repeats");
  require(r.runtime.threads >= 1, ErrorCode::InvalidRecord,
          "a published record needs a positive thread count");
  Json j;
  j["solver_id"] = r.solver_id;
  j["pde_id"] = r.pde_id;
  j["dof"] = r.dof;
  j["config_digest"] = r.config_digest;
  j["runtime_median_s"] = r.runtime.median_s;
  j["runtime_iqr_s"] = r.runtime.iqr_s;
  j["repeats"] = r.runtime.repeats;
  j["warmups"] = r.runtime.warmups;
  j["hardware"] = r.runtime.hardware;
  j["threads"] = r.runtime.threads;
  j["error_l2"] = r.error_l2;
  j["error_linf"] = r.error_linf;
  j["error_mae"] = r.error_mae;
  j["seed"] = r.seed;
  j["timestamp"] = r.timestamp;
  j["tool_version"] = kToolVersion;
  j["prng"] = r.prng;
  return j;
}

BenchRecord record_from_json(const Json& j) {
  try {
    BenchRecord r;
    r.solver_id = j.at("solver_id").get<std::string>();
    r.pde_id = j.at("pde_id").get<std::string>();
    r.dof = j.at("dof").get<long>();
    r.config_digest = j.at("config_digest").get<std::string>();
    r.runtime.median_s = j.at("runtime_median_s").get<double>();
    r.runtime.iqr_s = j.at("runtime_iqr_s").get<double>();
    r.runtime.repeats = j.at("repeats").get<int>();
    r.runtime.warmups = j.value("warmups", 0);
    r.runtime.hardware = j.at("hardware").get<std::string>();
    r.runtime.threads = j.at("threads").get<int>();
    r.error_l2 = j.at("error_l2").get<double>();
    r.error_linf = j.at("error_linf").get<double>();
    r.error_mae = j.at("error_mae").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.timestamp = j.value("timestamp", std::string());
    r.prng = j.value("prng", std::string());
    require(r.runtime.repeats >= 1, ErrorCode::InvalidRecord, "repeats must be positive");
    require(r.runtime.median_s > 0.0, ErrorCode::InvalidRecord, "runtime median must be positive");
    return r;
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidRecord, e.what());
  }
}

Json parse_or_fail(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidRecord, e.what());
  }
}

}  // namespace

std::string to_json_string(const BenchRecord& record) { return record_to_json(record).dump(2); }

BenchRecord record_from_json_string(const std::string& text) {
  return record_from_json(parse_or_fail(text));
}

void write_records_json(const std::vector<BenchRecord>& records, const std::string& path) {
  Json arr = Json::array();
  for (const BenchRecord& r : records) arr.push_back(record_to_json(r));
  std::ofstream out(path);
  out << arr.dump(2) << "\n";
  require(static_cast<bool>(out), ErrorCode::IoFailure, "could not write " + path);
}

std::vector<BenchRecord> read_records_json(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::IoFailure, "could not open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const Json arr = parse_or_fail(buffer.str());
  require(arr.is_array(), ErrorCode::InvalidRecord, "record file must hold a JSON array");
  std::vector<BenchRecord> records;
  for (const Json& j : arr) records.push_back(record_from_json(j));
  return records;
}

std::string iso_utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace pbb

#include "pbb/cli/run_config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pbb/core/errors.hpp"

namespace pbb {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string canonical_config_string(const RunConfig& c) {
  // Keys in alphabetical order; jobs and out_dir stay out (see header).
  std::string s;
  s += "amp_max=" + fmt(c.amp_max) + "\n";
  s += "amp_min=" + fmt(c.amp_min) + "\n";
  s += "bump_center=" + fmt(c.bump_center) + "\n";
  s += "bump_width=" + fmt(c.bump_width) + "\n";
  s += "cfl_factor=" + fmt(c.cfl_factor) + "\n";
  s += "ic_kind=" + c.ic_kind + "\n";
  s += "k_max=" + std::to_string(c.k_max) + "\n";
  s += "k_min=" + std::to_string(c.k_min) + "\n";
  s += "limiter_m=" + fmt(c.limiter_m) + "\n";
  s += "mean=" + fmt(c.mean) + "\n";
  s += "modes=" + std::to_string(c.modes) + "\n";
  s += "n=" + std::to_string(c.n) + "\n";
  s += "pde=" + c.pde + "\n";
  s += "repeats=" + std::to_string(c.repeats) + "\n";
  s += "seed=" + std::to_string(c.seed) + "\n";
  s += "solver=" + c.solver + "\n";
  s += "speed=" + fmt(c.speed) + "\n";
  s += "t_final=" + fmt(c.t_final) + "\n";
  s += "tol=" + fmt(c.tol) + "\n";
  s += "viscosity=" + fmt(c.viscosity) + "\n";
  s += "warmups=" + std::to_string(c.warmups) + "\n";
  return s;
}

std::string config_digest(const RunConfig& config) {
  const std::string text = canonical_config_string(config);
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

RunConfig run_config_from_json_file(const std::string& path, const RunConfig& base) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::IoFailure, "could not read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, "config file " + path + " is not valid json: " + e.what());
  }
  require(j.is_object(), ErrorCode::InvalidArgument, "config file must hold a flat json object");

  RunConfig c = base;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "pde") c.pde = value.get<std::string>();
      else if (key == "solver") c.solver = value.get<std::string>();
      else if (key == "n") c.n = value.get<int>();
      else if (key == "ic_kind") c.ic_kind = value.get<std::string>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "modes") c.modes = value.get<int>();
      else if (key == "amp_min") c.amp_min = value.get<double>();
      else if (key == "amp_max") c.amp_max = value.get<double>();
      else if (key == "k_min") c.k_min = value.get<int>();
      else if (key == "k_max") c.k_max = value.get<int>();
      else if (key == "mean") c.mean = value.get<double>();
      else if (key == "bump_center") c.bump_center = value.get<double>();
      else if (key == "bump_width") c.bump_width = value.get<double>();
      else if (key == "t_final") c.t_final = value.get<double>();
      else if (key == "cfl_factor") c.cfl_factor = value.get<double>();
      else if (key == "speed") c.speed = value.get<double>();
      else if (key == "viscosity") c.viscosity = value.get<double>();
      else if (key == "tol") c.tol = value.get<double>();
      else if (key == "limiter_m") c.limiter_m = value.get<double>();
      else if (key == "repeats") c.repeats = value.get<int>();
      else if (key == "warmups") c.warmups = value.get<int>();
      else if (key == "jobs") c.jobs = value.get<int>();
      else if (key == "out") c.out_dir = value.get<std::string>();
      else fail(ErrorCode::InvalidArgument, "unknown config key '" + key + "' in " + path);
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, "config file " + path + " is malformed: " + e.what());
  }
  return c;
}

}  // namespace pbb

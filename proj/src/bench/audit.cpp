#include "pbb/bench/audit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pbb/bench/match.hpp"
#include "pbb/core/errors.hpp"

namespace pbb {

namespace {

using Json = nlohmann::ordered_json;

bool contains(const std::vector<std::string>& list, const std::string& id) {
  return std::find(list.begin(), list.end(), id) != list.end();
}

std::string join(const std::vector<std::string>& list) {
  std::string out;
  for (const std::string& s : list) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

Verdict rule1_verdict(const Claim& claim) {
  Verdict v;
  v.rule = Rule::Rule1;

  const double a_lo = claim.front_a.points.back().error;
  const double a_hi = claim.front_a.points.front().error;
  const double b_lo = claim.front_b.points.back().error;
  const double b_hi = claim.front_b.points.front().error;
  const double lo = std::max(a_lo, b_lo);
  const double hi = std::min(a_hi, b_hi);
  if (lo > hi) {
    v.grade = Grade::Fail;
    v.reason_code = "extrapolation";
    v.rationale =
        "the error spans of the two fronts do not overlap, so the claim was "
        "never measured at matched accuracy";
    return v;
  }

  // Evaluate at the geometric midpoint of the shared error span; with both
  // spans covering it, the interpolation cannot extrapolate.
  const double target = std::sqrt(lo * hi);
  EqualAccuracyReport report;
  try {
    report = match_equal_accuracy(claim.front_a, claim.front_b, target);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Extrapolation) throw;
    v.grade = Grade::Fail;
    v.reason_code = "extrapolation";
    v.rationale = e.what();
    return v;
  }

  const double measured = report.speedup;
  char text[160];
  std::snprintf(text, sizeof text, "claimed %.3gx against measured %.3gx at error %.3g",
                claim.claimed_speedup, measured, target);
  v.rationale = text;
  if (std::abs(claim.claimed_speedup - measured) <= 0.25 * measured) {
    v.grade = Grade::Pass;
  } else if (std::max(claim.claimed_speedup / measured, measured / claim.claimed_speedup) <= 4.0) {
    v.grade = Grade::Warn;
  } else {
    v.grade = Grade::Fail;
    v.reason_code = "speedup_discrepancy";
  }
  return v;
}

Verdict rule2_verdict(const Claim& claim, const Rule2Registry& registry) {
  Verdict v;
  v.rule = Rule::Rule2;
  const auto it = registry.by_pde.find(claim.pde_id);
  if (it == registry.by_pde.end()) {
    v.grade = Grade::Warn;
    v.rationale = "pde '" + claim.pde_id + "' is not in the baseline registry, so the declared "
                  "baseline cannot be graded";
    return v;
  }
  const Rule2Entry& entry = it->second;
  const std::string& id = claim.declared_baseline_id;
  if (contains(entry.first_order, id)) {
    v.grade = Grade::Fail;
    v.reason_code = "first_order_baseline";
    v.rationale = "declared baseline '" + id + "' is first order for " + claim.pde_id +
                  "; first-order methods should not be used as baselines";
  } else if (contains(entry.inefficient, id)) {
    v.grade = Grade::Fail;
    v.reason_code = "inefficient_baseline";
    v.rationale = "declared baseline '" + id + "' is dominated for " + claim.pde_id +
                  "; efficient alternatives: " + join(entry.efficient);
  } else if (contains(entry.efficient, id)) {
    v.grade = Grade::Pass;
    v.rationale = "declared baseline '" + id + "' is an efficient method for " + claim.pde_id;
  } else {
    v.grade = Grade::Warn;
    v.rationale = "declared baseline '" + id + "' is not listed for " + claim.pde_id +
                  ", so its strength is unknown";
  }
  return v;
}

Json entry_to_json(const Rule2Entry& entry) {
  Json j;
  j["efficient"] = entry.efficient;
  j["first_order"] = entry.first_order;
  j["inefficient"] = entry.inefficient;
  j["note"] = entry.note;
  return j;
}

}  // namespace

const char* to_string(Rule rule) { return rule == Rule::Rule1 ? "rule1" : "rule2"; }

const char* to_string(Grade grade) {
  switch (grade) {
    case Grade::Pass:
      return "pass";
    case Grade::Warn:
      return "warn";
    default:
      return "fail";
  }
}

Rule2Registry Rule2Registry::builtin() {
  Rule2Registry reg;
  reg.by_pde["poisson"] = Rule2Entry{
      {"lu", "multigrid", "cholesky", "cg_preconditioned"},
      {},
      {"jacobi", "gauss_seidel", "sor", "richardson"},
      "Sparse direct factorization solves desk-scale grids in 0.2 to 12 ms and "
      "multigrid in 90 to 425 ms; stationary iterations are orders of magnitude "
      "behind both."};
  reg.by_pde["advection"] = Rule2Entry{
      {"ps", "dg2", "dg3", "weno5"},
      {"fd1_upwind", "godunov", "dg0"},
      {},
      "Smooth transport favors high-order discretizations; a handful of cells "
      "per wavelength beats hundreds of first-order cells."};
  reg.by_pde["burgers"] = Rule2Entry{
      {"weno5", "dg2", "dg3"},
      {"godunov", "fd1_upwind", "dg0"},
      {},
      "First-order methods should not be used as baselines; high-order shock "
      "capturing reaches the same error at a fraction of the cost."};
  reg.by_pde["navier_stokes_2d"] = Rule2Entry{
      {"ps"},
      {"fv1"},
      {},
      "On periodic boxes a dealiased pseudo-spectral discretization dominates "
      "low-order finite volumes at every tested accuracy."};
  reg.by_pde["wave"] = Rule2Entry{
      {"fv_wave", "ps"},
      {"fd1_upwind"},
      {},
      ""};
  return reg;
}

Rule2Registry Rule2Registry::from_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::IoFailure, "could not read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buffer.str());
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, "registry file " + path + " is not valid json: " + e.what());
  }
  require(j.is_object(), ErrorCode::InvalidArgument, "registry json must be an object keyed by pde");
  Rule2Registry reg;
  try {
    for (const auto& [pde, body] : j.items()) {
      Rule2Entry entry;
      entry.efficient = body.value("efficient", std::vector<std::string>{});
      entry.first_order = body.value("first_order", std::vector<std::string>{});
      entry.inefficient = body.value("inefficient", std::vector<std::string>{});
      entry.note = body.value("note", std::string{});
      reg.by_pde[pde] = std::move(entry);
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, "registry file " + path + " is malformed: " + e.what());
  }
  return reg;
}

std::string Rule2Registry::to_json_string() const {
  Json j = Json::object();
  for (const auto& [pde, entry] : by_pde) {
    j[pde] = entry_to_json(entry);
  }
  return j.dump(2) + "\n";
}

std::vector<Verdict> audit_comparison(const Claim& claim, const Rule2Registry& registry) {
  require(!claim.front_a.points.empty() && !claim.front_b.points.empty(), ErrorCode::EmptyClaim,
          "a claim needs measured points on both sides");
  validate_front(claim.front_a);
  validate_front(claim.front_b);
  require(std::isfinite(claim.claimed_speedup) && claim.claimed_speedup > 0.0,
          ErrorCode::InvalidArgument, "claimed speedup must be positive and finite");

  return {rule1_verdict(claim), rule2_verdict(claim, registry)};
}

std::string verdicts_to_json_string(const std::vector<Verdict>& verdicts) {
  Json arr = Json::array();
  for (const Verdict& v : verdicts) {
    Json j;
    j["rule"] = to_string(v.rule);
    j["grade"] = to_string(v.grade);
    j["rationale"] = v.rationale;
    j["reason_code"] = v.reason_code;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

namespace {

Json points_to_json(const std::vector<ParetoPoint>& points) {
  Json arr = Json::array();
  for (const ParetoPoint& p : points) {
    Json j;
    j["cost_s"] = p.cost_s;
    j["error"] = p.error;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<ParetoPoint> points_from_json(const Json& arr) {
  std::vector<ParetoPoint> out;
  for (const auto& j : arr) {
    out.push_back({j.at("cost_s").get<double>(), j.at("error").get<double>()});
  }
  return out;
}

Json front_to_json(const ParetoFront& front) {
  Json j;
  j["solver_id"] = front.solver_id;
  j["points"] = points_to_json(front.points);
  j["dominated"] = points_to_json(front.dominated);
  return j;
}

ParetoFront front_from_json(const Json& j) {
  ParetoFront front;
  front.solver_id = j.at("solver_id").get<std::string>();
  front.points = points_from_json(j.at("points"));
  front.dominated = points_from_json(j.value("dominated", Json::array()));
  return front;
}

}  // namespace

std::string claim_to_json_string(const Claim& claim) {
  Json j;
  j["front_a"] = front_to_json(claim.front_a);
  j["front_b"] = front_to_json(claim.front_b);
  j["claimed_speedup"] = claim.claimed_speedup;
  j["declared_baseline_id"] = claim.declared_baseline_id;
  j["pde_id"] = claim.pde_id;
  return j.dump(2) + "\n";
}

Claim claim_from_json_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("claim is not valid json: ") + e.what());
  }
  Claim claim;
  try {
    claim.front_a = front_from_json(j.at("front_a"));
    claim.front_b = front_from_json(j.at("front_b"));
    claim.claimed_speedup = j.at("claimed_speedup").get<double>();
    claim.declared_baseline_id = j.value("declared_baseline_id", std::string{});
    claim.pde_id = j.value("pde_id", std::string{});
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("claim json is malformed: ") + e.what());
  }
  return claim;
}

Claim claim_from_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::IoFailure, "could not read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return claim_from_json_string(buffer.str());
}

std::vector<Verdict> verdicts_from_json_string(const std::string& text) {
  Json arr;
  try {
    arr = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("verdicts are not valid json: ") + e.what());
  }
  require(arr.is_array(), ErrorCode::InvalidArgument, "verdicts json must be an array");
  std::vector<Verdict> out;
  try {
    for (const auto& j : arr) {
      Verdict v;
      const std::string rule = j.at("rule");
      const std::string grade = j.at("grade");
      if (rule == "rule1") {
        v.rule = Rule::Rule1;
      } else if (rule == "rule2") {
        v.rule = Rule::Rule2;
      } else {
        fail(ErrorCode::InvalidArgument, "unknown rule '" + rule + "'");
      }
      if (grade == "pass") {
        v.grade = Grade::Pass;
      } else if (grade == "warn") {
        v.grade = Grade::Warn;
      } else if (grade == "fail") {
        v.grade = Grade::Fail;
      } else {
        fail(ErrorCode::InvalidArgument, "unknown grade '" + grade + "'");
      }
      v.rationale = j.value("rationale", std::string{});
      v.reason_code = j.value("reason_code", std::string{});
      out.push_back(std::move(v));
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("verdicts json is malformed: ") + e.what());
  }
  return out;
}

}  // namespace pbb

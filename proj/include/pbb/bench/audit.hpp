#pragma once

/// @file
/// @brief Mechanized fairness audit of a speedup claim: consistency with the
/// measured fronts (rule one) and strength of the declared baseline method
/// (rule two).

#include <map>
#include <string>
#include <vector>

#include "pbb/bench/pareto.hpp"

namespace pbb {

enum class Rule { Rule1, Rule2 };
enum class Grade { Pass, Warn, Fail };

const char* to_string(Rule rule);
const char* to_string(Grade grade);

/// One graded rule. Fail always carries a machine-checkable reason code
/// ("speedup_discrepancy", "extrapolation", "inefficient_baseline",
/// "first_order_baseline").
struct Verdict {
  Rule rule = Rule::Rule1;
  Grade grade = Grade::Pass;
  std::string rationale;
  std::string reason_code;
};

/// A published comparison under audit: the two measured fronts, the claimed
/// speedup of solver B over solver A, and what the claim declared as its
/// baseline method.
struct Claim {
  ParetoFront front_a;
  ParetoFront front_b;
  double claimed_speedup = 0.0;
  std::string declared_baseline_id;
  std::string pde_id;
};

/// Method lists for one PDE class. first_order entries fail because
/// first-order methods should not be used as baselines; inefficient entries
/// fail because a stronger method class dominates them.
struct Rule2Entry {
  std::vector<std::string> efficient;
  std::vector<std::string> first_order;
  std::vector<std::string> inefficient;
  std::string note;
};

/// Registry mapping PDE id to baseline guidance. Shipped as data
/// (data/baseline_registry.json mirrors builtin()) so users can extend it.
struct Rule2Registry {
  std::map<std::string, Rule2Entry> by_pde;

  static Rule2Registry builtin();
  static Rule2Registry from_json_file(const std::string& path);
  std::string to_json_string() const;
};

/// Grade the claim. Rule one compares the claimed speedup against
/// match_equal_accuracy at the geometric midpoint of the fronts' shared
/// error span: within 25 percent passes, up to 4x warns, beyond 4x or an
/// extrapolation fails. Rule two grades the declared baseline by registry
/// lookup. Pure: identical claims always produce identical verdicts.
std::vector<Verdict> audit_comparison(const Claim& claim,
                                      const Rule2Registry& registry = Rule2Registry::builtin());

std::string verdicts_to_json_string(const std::vector<Verdict>& verdicts);
std::vector<Verdict> verdicts_from_json_string(const std::string& text);

std::string claim_to_json_string(const Claim& claim);
Claim claim_from_json_string(const std::string& text);
Claim claim_from_json_file(const std::string& path);

}  // namespace pbb

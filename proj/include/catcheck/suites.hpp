#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "catcheck/generators.hpp"

namespace catcheck {

// Named inputs of one verification case.  Everything a verdict needs is
// reconstructible from these, which is what makes counterexamples
// replayable.
struct CaseInputs {
  std::map<std::string, Morphism> morphisms;
  std::map<std::string, int> objects;
  friend bool operator==(const CaseInputs&, const CaseInputs&) = default;
};

using CaseSink = std::function<void(const CaseInputs&)>;

struct Check {
  std::string name;
  std::function<void(const Instance&, const GenParams&, const CaseSink&)>
      generate;
  // true = pass.  Throws std::invalid_argument on malformed inputs (replay
  // surfaces that as a usage error, not a verdict).
  std::function<bool(const Instance&, const CaseInputs&)> verdict;
};

struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::optional<CaseInputs> counterexample;  // first failure
};

struct SuiteReport {
  std::string suite;
  Instance instance;
  GenParams params;
  std::vector<CheckResult> checks;
  std::int64_t duration_ms = 0;
};

struct SuiteDef {
  std::string name;
  std::vector<Kind> applicable;
  std::vector<Check> (*make_checks)();
  // Checks expected to fail on a given instance when running a
  // negative-control assertion (--expect-negative).
  std::set<std::string> (*expected_failures)(Kind kind);
};

const std::vector<SuiteDef>& suite_registry();
const SuiteDef* find_suite(const std::string& name);
std::vector<std::string> suites_for(Kind kind);
bool suite_applicable(const SuiteDef& def, Kind kind);

SuiteReport run_suite(const std::string& suite, const Instance& inst,
                      const GenParams& params);

// Global check lookup for counterexample replay.
const Check* find_check(const std::string& name);

}  // namespace catcheck

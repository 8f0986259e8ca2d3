#pragma once

#include <string>

#include "json.hpp"

#include "catcheck/suites.hpp"

namespace catcheck {

using ordered_json = nlohmann::ordered_json;

// Wire formats.  Morphisms:
//   {"cat":"finset"|"pfinset","dom":n,"cod":m,"table":[...]}
//   {"cat":"finvect","p":prime,"dom":n,"cod":m,"entries":[row-major]}
ordered_json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const nlohmann::json& j);

ordered_json params_to_json(const GenParams& params, const Instance& inst);

// A counterexample document doubles as a replay file: the check name, the
// instance parameters, and the named inputs.
ordered_json counterexample_to_json(const std::string& check,
                                    const Instance& inst,
                                    const CaseInputs& inputs);
CaseInputs case_inputs_from_json(const nlohmann::json& j,
                                 const Instance& inst);

// {"suite":..., "instance":..., "params":{...}, "checks":[...],
//  "duration_ms":...}; byte-stable apart from duration_ms.
ordered_json report_to_json(const SuiteReport& report);

// Pure projection of the JSON report.
std::string report_text_summary(const ordered_json& report);

// Deep-copies with duration_ms removed, for determinism comparisons.
ordered_json strip_duration(ordered_json reports);

// Re-runs the single named check on the serialized inputs.  Exit semantics:
// 0 pass, 1 fail, 2 malformed file / unknown check.
int replay_file(const std::string& path, std::string& out_message);

}  // namespace catcheck

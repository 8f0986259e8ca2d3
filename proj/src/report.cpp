#include "catcheck/report.hpp"

#include <fstream>
#include <sstream>

namespace catcheck {

ordered_json morphism_to_json(const Morphism& m) {
  ordered_json j;
  j["cat"] = instance_name(m.inst());
  if (m.inst().kind == Kind::finvect) {
    j["p"] = m.inst().prime;
    j["dom"] = m.dom.size;
    j["cod"] = m.cod.size;
    j["entries"] = m.data;
  } else {
    j["dom"] = m.dom.size;
    j["cod"] = m.cod.size;
    j["table"] = m.data;
  }
  return j;
}

Morphism morphism_from_json(const nlohmann::json& j) {
  const std::string cat = j.at("cat").get<std::string>();
  const Instance inst =
      parse_instance(cat, cat == "finvect" ? j.at("p").get<int>() : 2);
  const int dom = j.at("dom").get<int>();
  const int cod = j.at("cod").get<int>();
  const auto& payload =
      inst.kind == Kind::finvect ? j.at("entries") : j.at("table");
  return make_morphism(inst, dom, cod, payload.get<std::vector<int>>());
}

ordered_json params_to_json(const GenParams& params, const Instance& inst) {
  ordered_json j;
  j["seed"] = params.seed;
  j["max_size"] = params.max_size;
  j["samples"] = params.samples;
  j["mode"] = mode_name(params.mode);
  if (inst.kind == Kind::finvect) j["prime"] = inst.prime;
  return j;
}

ordered_json counterexample_to_json(const std::string& check,
                                    const Instance& inst,
                                    const CaseInputs& inputs) {
  ordered_json j;
  j["check"] = check;
  j["instance"] = instance_name(inst);
  if (inst.kind == Kind::finvect) j["prime"] = inst.prime;
  ordered_json ms = ordered_json::object();
  for (const auto& [name, m] : inputs.morphisms)
    ms[name] = morphism_to_json(m);
  j["inputs"] = std::move(ms);
  ordered_json objs = ordered_json::object();
  for (const auto& [name, size] : inputs.objects) objs[name] = size;
  j["objects"] = std::move(objs);
  return j;
}

CaseInputs case_inputs_from_json(const nlohmann::json& j,
                                 const Instance& inst) {
  CaseInputs ci;
  if (j.contains("inputs"))
    for (const auto& [name, mj] : j.at("inputs").items()) {
      Morphism m = morphism_from_json(mj);
      if (!(m.inst() == inst))
        throw std::invalid_argument("input morphism from a different instance");
      ci.morphisms.emplace(name, std::move(m));
    }
  if (j.contains("objects"))
    for (const auto& [name, size] : j.at("objects").items())
      ci.objects.emplace(name, size.get<int>());
  return ci;
}

ordered_json report_to_json(const SuiteReport& report) {
  ordered_json j;
  j["suite"] = report.suite;
  j["instance"] = instance_name(report.instance);
  j["params"] = params_to_json(report.params, report.instance);
  ordered_json checks = ordered_json::array();
  for (const CheckResult& res : report.checks) {
    ordered_json c;
    c["name"] = res.name;
    c["cases"] = res.cases;
    c["failures"] = res.failures;
    c["counterexample"] =
        res.counterexample
            ? counterexample_to_json(res.name, report.instance,
                                     *res.counterexample)
            : ordered_json(nullptr);
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["duration_ms"] = report.duration_ms;
  return j;
}

std::string report_text_summary(const ordered_json& report) {
  std::ostringstream out;
  out << "suite " << report.at("suite").get<std::string>() << " on "
      << report.at("instance").get<std::string>();
  const auto& params = report.at("params");
  out << " (seed=" << params.at("seed") << " max_size=" << params.at("max_size")
      << " samples=" << params.at("samples") << " mode="
      << params.at("mode").get<std::string>();
  if (params.contains("prime")) out << " prime=" << params.at("prime");
  out << ")\n";
  for (const auto& c : report.at("checks")) {
    const long failures = c.at("failures").get<long>();
    out << "  [" << (failures == 0 ? "ok" : "FAIL") << "] "
        << c.at("name").get<std::string>() << "  cases="
        << c.at("cases").get<long>() << " failures=" << failures << "\n";
  }
  out << "  duration_ms=" << report.at("duration_ms") << "\n";
  return out.str();
}

ordered_json strip_duration(ordered_json reports) {
  if (reports.is_array()) {
    for (auto& r : reports) r.erase("duration_ms");
  } else {
    reports.erase("duration_ms");
  }
  return reports;
}

int replay_file(const std::string& path, std::string& out_message) {
  nlohmann::json doc;
  try {
    std::ifstream in(path);
    if (!in) {
      out_message = "cannot open " + path;
      return 2;
    }
    doc = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    out_message = std::string("malformed replay file: ") + e.what();
    return 2;
  }
  try {
    const std::string check_name = doc.at("check").get<std::string>();
    const Check* check = find_check(check_name);
    if (!check) {
      out_message = "unknown check: " + check_name;
      return 2;
    }
    const Instance inst = parse_instance(
        doc.at("instance").get<std::string>(),
        doc.contains("prime") ? doc.at("prime").get<int>() : 2);
    const CaseInputs inputs = case_inputs_from_json(doc, inst);
    const bool pass = check->verdict(inst, inputs);
    out_message = "check " + check_name + ": " + (pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    out_message = std::string("invalid replay inputs: ") + e.what();
    return 2;
  } catch (const nlohmann::json::exception& e) {
    out_message = std::string("malformed replay file: ") + e.what();
    return 2;
  }
}

}  // namespace catcheck

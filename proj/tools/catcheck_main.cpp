#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "catcheck/report.hpp"

using namespace catcheck;

namespace {

struct RunConfig {
  std::string instance;
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 42;
  int max_size = -1;  // -1: per-instance default
  int samples = 500;
  int prime = 2;
  std::string mode;  // empty: per-instance default
  std::string output;
  std::string format = "text-summary";
  bool expect_negative = false;
};

GenParams params_for(const RunConfig& cfg, const Instance& inst) {
  GenParams p;
  p.seed = cfg.seed;
  p.samples = cfg.samples;
  // defaults: seed 42, max_size 4 (finset/pfinset), dim 3 (finvect),
  // 500 samples; finvect samples by default, the table instances add the
  // exhaustive sweep
  p.max_size = cfg.max_size >= 0
                   ? cfg.max_size
                   : (inst.kind == Kind::finvect ? 3 : 4);
  p.mode = cfg.mode.empty()
               ? (inst.kind == Kind::finvect ? GenMode::sampled
                                             : GenMode::both)
               : parse_mode(cfg.mode);
  return p;
}

int run_command(const RunConfig& cfg) {
  Instance inst;
  try {
    inst = parse_instance(cfg.instance, cfg.prime);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<std::string> suites;
  if (cfg.suites.size() == 1 && cfg.suites[0] == "all") {
    suites = suites_for(inst.kind);
  } else {
    for (const std::string& name : cfg.suites) {
      const SuiteDef* def = find_suite(name);
      if (!def) {
        std::cerr << "error: unknown suite: " << name << "\n";
        return 2;
      }
      if (!suite_applicable(*def, inst.kind)) {
        std::cerr << "error: suite " << name << " is not applicable to "
                  << instance_name(inst) << "\n";
        return 2;
      }
      suites.push_back(name);
    }
  }
  if (cfg.format != "json" && cfg.format != "text-summary") {
    std::cerr << "error: unknown format: " << cfg.format << "\n";
    return 2;
  }

  const GenParams params = params_for(cfg, inst);
  ordered_json reports = ordered_json::array();
  bool ok = true;
  for (const std::string& name : suites) {
    SuiteReport rep;
    try {
      rep = run_suite(name, inst, params);
    } catch (const BudgetExceeded& e) {
      std::cerr << "error: " << name << ": " << e.what() << "\n";
      return 2;
    }
    const SuiteDef* def = find_suite(name);
    const std::set<std::string> expect_fail =
        cfg.expect_negative ? def->expected_failures(inst.kind)
                            : std::set<std::string>{};
    for (const CheckResult& c : rep.checks) {
      const bool should_fail = expect_fail.count(c.name) > 0;
      if (should_fail ? c.failures == 0 : c.failures != 0) ok = false;
    }
    reports.push_back(report_to_json(rep));
  }

  const ordered_json out_doc =
      reports.size() == 1 ? reports[0] : reports;
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return 2;
    }
    out << out_doc.dump(2) << "\n";
  }
  if (cfg.format == "json") {
    if (cfg.output.empty()) std::cout << out_doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << report_text_summary(r);
  }
  // keep stdout a pure report; the verdict line goes to stderr
  std::cerr << (ok ? "verdicts matched expectations"
                   : "unexpected verdicts present")
            << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catcheck: categorical-law verification over finite "
               "set, vector-space, and pointed-set instances"};
  app.require_subcommand(1);

  RunConfig cfg;
  CLI::App* run = app.add_subcommand("run", "run verification suites");
  run->add_option("--instance", cfg.instance,
                  "instance: finset | finvect | pfinset")
      ->required();
  run->add_option("--suite", cfg.suites,
                  "suite names (repeatable), or 'all'");
  run->add_option("--seed", cfg.seed, "generation seed");
  run->add_option("--max-size", cfg.max_size,
                  "size / dimension bound for generated objects");
  run->add_option("--samples", cfg.samples, "sampled cases per check");
  run->add_option("--prime", cfg.prime, "field prime (finvect)");
  run->add_option("--mode", cfg.mode,
                  "generation mode: exhaustive | sampled | both");
  run->add_option("--output", cfg.output, "write the JSON report here");
  run->add_option("--format", cfg.format, "json | text-summary");
  run->add_flag("--expect-negative", cfg.expect_negative,
                "succeed only if the registered negative-control checks "
                "fail (and everything else passes)");

  std::string replay_path;
  CLI::App* replay = app.add_subcommand(
      "replay", "re-run one serialized counterexample");
  replay->add_option("file", replay_path, "counterexample JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (run->parsed()) {
    try {
      return run_command(cfg);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  std::string msg;
  const int code = replay_file(replay_path, msg);
  std::cout << msg << "\n";
  return code;
}

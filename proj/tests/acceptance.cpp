// Acceptance gate: runs every criterion at its pinned budget and prints one
// pass/fail line per criterion.  Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "catcheck/report.hpp"

using namespace catcheck;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& desc, bool ok) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", n,
              desc.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

bool all_clean(const SuiteReport& rep) {
  for (const auto& c : rep.checks)
    if (c.failures != 0) return false;
  return true;
}

const CheckResult& result_of(const SuiteReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  throw std::logic_error("missing check " + name);
}

double run_timed(const std::string& suite, const Instance& inst,
                 const GenParams& params, SuiteReport& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = run_suite(suite, inst, params);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// The default battery the CLI runs: every applicable suite per instance at
// the default parameters.
ordered_json default_battery() {
  ordered_json reports = ordered_json::array();
  const GenParams table_params{.seed = 42, .max_size = 4, .samples = 500,
                               .mode = GenMode::both};
  const GenParams vect_params{.seed = 42, .max_size = 3, .samples = 500,
                              .mode = GenMode::sampled};
  const std::vector<std::pair<Instance, GenParams>> instances = {
      {finset(), table_params},
      {finvect(2), vect_params},
      {pfinset(), table_params},
  };
  for (const auto& [inst, params] : instances)
    for (const std::string& suite : suites_for(inst.kind))
      reports.push_back(report_to_json(run_suite(suite, inst, params)));
  return reports;
}

}  // namespace

int main() {
  const GenParams fs_default{.seed = 42, .max_size = 4, .samples = 500,
                             .mode = GenMode::both};
  const GenParams fv_default{.seed = 42, .max_size = 3, .samples = 500,
                             .mode = GenMode::sampled};
  const GenParams exhaustive3{.seed = 42, .max_size = 3, .samples = 0,
                              .mode = GenMode::exhaustive};
  const GenParams exhaustive4{.seed = 42, .max_size = 4, .samples = 0,
                              .mode = GenMode::exhaustive};

  // 1. Condition 1 positive: finset exhaustive <= 3 plus 500 sampled at
  //    <= 4, finvect_F2 dims <= 3 with 500 samples; zero failures, < 60 s
  //    each.
  {
    SuiteReport fs, fv;
    const double t_fs = run_timed("condition1", finset(), fs_default, fs);
    const double t_fv = run_timed("condition1", finvect(2), fv_default, fv);
    criterion(1,
              "condition1 clean on finset and finvect_F2 within 60 s each",
              all_clean(fs) && all_clean(fv) && t_fs < 60.0 && t_fv < 60.0);
  }

  // 2. Condition 1 negative: pfinset exhaustive <= 3 fails exactly in (b)
  //    and the counterexample replays to failure.
  {
    const SuiteReport rep = run_suite("condition1", pfinset(), exhaustive3);
    const CheckResult& a = result_of(rep, "a_coproduct_universal_property");
    const CheckResult& b = result_of(rep, "b_coproducts_of_pullbacks");
    const CheckResult& c = result_of(rep, "c_mono_fold_pullback");
    const CheckResult& d = result_of(rep, "d_regular_epi_fold_feeble");
    bool replayed = false;
    if (b.counterexample) {
      const std::string path = "acceptance_pfinset_b.json";
      std::ofstream(path) << counterexample_to_json(b.name, pfinset(),
                                                    *b.counterexample)
                                 .dump(2);
      std::string msg;
      replayed = replay_file(path, msg) == 1;
      std::remove(path.c_str());
    }
    criterion(2,
              "pfinset condition1 fails only in (b), counterexample replays",
              a.failures == 0 && b.failures >= 1 && c.failures == 0 &&
                  d.failures == 0 && replayed);
  }

  // 3. Extensivity on finset: all diagram-law checks, the coproduct/pullback
  //    biconditional, and strict initiality pass exhaustively at <= 3.
  {
    const SuiteReport rep = run_suite("extensivity", finset(), exhaustive3);
    criterion(3, "extensivity suite exhaustively clean on finset at <= 3",
              all_clean(rep));
  }

  // 4. Additivity on finvect_F2 and finvect_F3: fold-square checks, biproduct
  //    squares, invertible shear at dims <= 3, and at least one sampled
  //    feeble-but-not-pullback witness.
  {
    bool ok = true;
    for (int p : {2, 3}) {
      const SuiteReport rep = run_suite("additivity", finvect(p), fv_default);
      const CheckResult& witness =
          result_of(rep, "add_a2_feeble_not_pullback_witness");
      const CheckResult& shear = result_of(rep, "add_shear_map_invertible");
      ok = ok && all_clean(rep) && witness.cases >= 1 && shear.cases >= 4;
    }
    criterion(4, "additivity suite clean on finvect_F2 and finvect_F3",
              ok);
  }

  // 5. Feeble calculus: pasting laws, jointly-monic upgrade, coproduct
  //    stability on >= 1000 generated square pairs per instance.
  {
    GenParams p = fs_default;
    p.samples = 1000;
    GenParams q = fv_default;
    q.samples = 1000;
    const SuiteReport fs = run_suite("feeble_calculus", finset(), p);
    const SuiteReport fv = run_suite("feeble_calculus", finvect(2), q);
    bool enough = true;
    for (const auto& c : fs.checks) enough = enough && c.cases >= 1000;
    for (const auto& c : fv.checks) enough = enough && c.cases >= 1000;
    criterion(5,
              "feeble pasting laws clean on >= 1000 square pairs per "
              "instance",
              all_clean(fs) && all_clean(fv) && enough);
  }

  // 6. Exact consequences: >= 500 generated (m,e) and (m,f) inputs per
  //    instance; pushouts match the oracle, are pullbacks, preserve monos;
  //    monos are equalizers of their cokernel pairs; mono+epi = iso.
  {
    const SuiteReport fs = run_suite("exact_consequences", finset(),
                                     fs_default);
    const SuiteReport fv = run_suite("exact_consequences", finvect(2),
                                     fv_default);
    bool enough = true;
    for (const auto* rep : {&fs, &fv}) {
      enough = enough &&
               result_of(*rep, "exact_pushout_along_regular_epi").cases >= 500 &&
               result_of(*rep, "exact_pushout_general").cases >= 500;
    }
    criterion(6, "exact-consequence checks clean on >= 500 inputs per "
                 "instance",
              all_clean(fs) && all_clean(fv) && enough);
  }

  // 7. Coexactness: every generated reflexive corelation is co-effective;
  //    finset exhaustive at |A| <= 4, |Q| <= 6, finvect_F2 sampled dims
  //    <= 3.
  {
    const SuiteReport fs = run_suite("coexactness", finset(), exhaustive4);
    GenParams q = fv_default;
    q.samples = 1000;
    const SuiteReport fv = run_suite("coexactness", finvect(2), q);
    const long fs_cases = result_of(fs, "coexact_reflexive_corelations").cases;
    criterion(7, "all generated reflexive corelations are co-effective",
              all_clean(fs) && all_clean(fv) && fs_cases >= 1000);
  }

  // 8. Coprotomodularity: exhaustive finset sweep at |A| <= 4 and sampled
  //    finvect sweep produce no scenario with h iso and f non-iso.
  {
    const SuiteReport fs = run_suite("coprotomodularity", finset(),
                                     exhaustive4);
    const SuiteReport fv = run_suite("coprotomodularity", finvect(2),
                                     fv_default);
    criterion(8, "no scenario with h iso and f non-iso",
              all_clean(fs) && all_clean(fv));
  }

  // 9. Coherence / arithmetical: join preservation and Sub(A)
  //    distributivity exhaustively at sizes <= 4; 0 -> 1 is mono.
  {
    const SuiteReport rep = run_suite("coherence_arithmetical", finset(),
                                      exhaustive4);
    criterion(9, "coherence and subobject distributivity clean at <= 4",
              all_clean(rep));
  }

  // 10. Determinism: two runs of the full default battery are
  //     byte-identical up to duration, and one battery finishes in < 5
  //     minutes.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const ordered_json first = default_battery();
    const double battery_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const ordered_json second = default_battery();
    const bool identical =
        strip_duration(first).dump() == strip_duration(second).dump();
    criterion(10, "default battery deterministic and < 5 minutes",
              identical && battery_secs < 300.0);
  }

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}

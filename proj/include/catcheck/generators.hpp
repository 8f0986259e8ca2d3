#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "catcheck/constructions.hpp"

namespace catcheck {

enum class GenMode { exhaustive, sampled, both };

std::string mode_name(GenMode mode);
GenMode parse_mode(const std::string& name);

// Identical GenParams yield identical case streams.  `both` runs the
// exhaustive stream capped at size both_exhaustive_cap() plus `samples`
// sampled cases at max_size.
struct GenParams {
  std::uint64_t seed = 42;
  int max_size = 4;
  int samples = 500;
  GenMode mode = GenMode::both;
  friend bool operator==(const GenParams&, const GenParams&) = default;
};

int both_exhaustive_cap();

// Counter-based splittable generator (splitmix64 finalizer over an affine
// counter walk).  Test vectors live in docs/generator.md and are frozen in
// the unit tests so other implementations can reproduce identical streams.
std::uint64_t rng_mix(std::uint64_t z);
std::uint64_t rng_at(std::uint64_t key, std::uint64_t counter);
std::uint64_t rng_derive(std::uint64_t key, std::uint64_t tag);
std::uint64_t rng_tag(const std::string& name);  // FNV-1a 64

struct Rng {
  std::uint64_t key = 0;
  std::uint64_t counter = 0;

  std::uint64_t next() { return rng_at(key, counter++); }
  int below(int n);             // uniform in [0, n), n >= 1, by modulo
  int range(int lo, int hi);    // uniform in [lo, hi]
};

// Enumeration budget for exhaustive streams, in cases, derived from the
// CATCHECK_BUDGET_MS environment variable (default 10000 ms at an assumed
// 1000 cases/ms).  Exhaustive mode is rejected when a stream's enumeration
// bound exceeds it; `both` mode falls back to sampling instead.
long exhaustive_budget_cases();

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using MorphismSink = std::function<void(const Morphism&)>;
using RelationSink = std::function<void(const Relation&)>;
using CorelationSink = std::function<void(const Corelation&)>;
using ProtoSink = std::function<void(const Morphism& alpha, const Morphism& f)>;

// Exhaustive enumeration at fixed endpoints, canonical order (tables in
// base-|cod| / base-p ascending order).
void for_each_morphism(const Instance& inst, int dom, int cod,
                       const MorphismSink& fn);
void for_each_mono(const Instance& inst, int dom, int cod,
                   const MorphismSink& fn);
void for_each_regular_epi(const Instance& inst, int dom, int cod,
                          const MorphismSink& fn);
void for_each_iso(const Instance& inst, int n, const MorphismSink& fn);
long hom_count(const Instance& inst, int dom, int cod);
int min_object_size(const Instance& inst);

// Seeded draws; every result satisfies the advertised predicate.
Morphism sample_morphism(Rng& rng, const Instance& inst, int dom, int cod);
Morphism sample_mono(Rng& rng, const Instance& inst, int dom, int cod);
Morphism sample_regular_epi(Rng& rng, const Instance& inst, int dom, int cod);
Morphism sample_iso(Rng& rng, const Instance& inst, int n);

// Mode-aware streams over all shapes with sizes <= params bounds; exhaustive
// mode yields each qualifying morphism exactly once.  Unsatisfiable shapes
// are skipped.
void gen_morphism(const GenParams& params, const Instance& inst,
                  const MorphismSink& fn);
void gen_mono(const GenParams& params, const Instance& inst,
              const MorphismSink& fn);
void gen_regular_epi(const GenParams& params, const Instance& inst,
                     const MorphismSink& fn);
void gen_iso(const GenParams& params, const Instance& inst,
             const MorphismSink& fn);

// Equivalence relations: set partitions (finset/pfinset, all of them in
// exhaustive mode) or subspace-induced kernel-pair relations (finvect).
void for_each_equivalence_relation(const Instance& inst, int on_size,
                                   const RelationSink& fn);
Relation sample_equivalence_relation(Rng& rng, const Instance& inst,
                                     int on_size);
void gen_equivalence_relation(const GenParams& params, const Instance& inst,
                              int on_size, const RelationSink& fn);

// Reflexive corelations built as surjection-plus-sections with jointly
// surjective images, so the Corelation invariants hold by construction.
void for_each_reflexive_corelation(const Instance& inst, int a_max, int q_max,
                                   const CorelationSink& fn);
Corelation sample_reflexive_corelation(Rng& rng, const Instance& inst,
                                       int a_max, int q_max);
void gen_reflexive_corelation(const GenParams& params, const Instance& inst,
                              const CorelationSink& fn);

// (alpha mono, f epi with f alpha mono).
void for_each_proto_scenario(const Instance& inst, int max_size,
                             const ProtoSink& fn);
void gen_proto_scenario(const GenParams& params, const Instance& inst,
                        const ProtoSink& fn);

// Closed-form counters used to validate exhaustive completeness.
long bell_number(int n);
long injection_count(int dom, int cod);
long surjection_count(int dom, int cod);

}  // namespace catcheck

#include "catcheck/suites.hpp"

#include <chrono>

namespace catcheck {

namespace {

// ---------------------------------------------------------------------------
// shared plumbing

struct Plan {
  bool exhaustive = false;
  int cap = 0;  // exhaustive size cap
  bool sampled = false;
  int samples = 0;
  int max_size = 0;
};

Plan plan_for(const GenParams& p) {
  Plan pl;
  pl.exhaustive = p.mode != GenMode::sampled;
  pl.cap = p.mode == GenMode::both
               ? std::min(p.max_size, both_exhaustive_cap())
               : p.max_size;
  pl.sampled = p.mode != GenMode::exhaustive;
  pl.samples = p.samples;
  pl.max_size = p.max_size;
  return pl;
}

// True when the exhaustive portion fits the budget; throws in pure
// exhaustive mode, falls through to sampling otherwise.
bool exhaustive_ok(const GenParams& p, long bound) {
  if (bound >= 0 && bound <= exhaustive_budget_cases()) return true;
  if (p.mode == GenMode::exhaustive)
    throw BudgetExceeded("exhaustive enumeration bound " +
                         std::to_string(bound) + " exceeds budget");
  return false;
}

std::uint64_t check_key(const GenParams& p, const std::string& name) {
  return rng_derive(p.seed, rng_tag(name));
}

const Morphism& arg(const CaseInputs& ci, const std::string& name) {
  auto it = ci.morphisms.find(name);
  if (it == ci.morphisms.end())
    throw std::invalid_argument("missing input morphism: " + name);
  return it->second;
}

int obj_arg(const CaseInputs& ci, const std::string& name) {
  auto it = ci.objects.find(name);
  if (it == ci.objects.end())
    throw std::invalid_argument("missing input object: " + name);
  return it->second;
}

// ---------------------------------------------------------------------------
// diagram shapes

// Mono-fold square: top m+1, left [1,1], right [1,m], bottom m.
Square mono_fold_square(const Morphism& m) {
  if (!is_mono(m)) throw std::invalid_argument("expected a monomorphism");
  const ObjHandle s = m.dom;
  return Square{morphism_coproduct(m, identity(s)), fold(s),
                copair(identity(m.cod), m), m};
}

// Fold square of an epi: top p+p, left [1,1], right [1,1], bottom p.
Square epi_fold_square(const Morphism& p) {
  return Square{morphism_coproduct(p, p), fold(p.dom), fold(p.cod), p};
}

// Codiagonal square: top [1,1], left f+f, right f, bottom [1,1].
Square codiagonal_square(const Morphism& f) {
  return Square{fold(f.dom), morphism_coproduct(f, f), f, fold(f.cod)};
}

// Canonical pullback square of (f, g), apex re-indexed along the iso w.
Square twisted_pullback_square(const Morphism& f, const Morphism& g,
                               const Morphism& w) {
  const PullbackResult pb = pullback(f, g);
  if (!(w.cod == pb.apex) || !(w.dom.size == w.cod.size) || !is_iso(w))
    throw std::invalid_argument("twist is not an iso onto the pullback apex");
  return Square{compose(pb.proj2, w), compose(pb.proj1, w), g, f};
}

// Commuting square built from a morphism u into the canonical pullback of
// (bottom, right); its comparison morphism is u itself.
Square scaffold_square(const Morphism& bottom, const Morphism& right,
                       const Morphism& u) {
  const PullbackResult pb = pullback(bottom, right);
  if (!(u.cod == pb.apex))
    throw std::invalid_argument("scaffold morphism misses the pullback apex");
  return Square{compose(pb.proj2, u), compose(pb.proj1, u), right, bottom};
}

// ---------------------------------------------------------------------------
// case-stream helpers

int size_lo(const Instance& inst) { return min_object_size(inst); }

struct Cospan {
  Morphism f, g;
  Morphism twist;  // identity on the pullback apex
};

std::vector<Cospan> cospan_pool(const Instance& inst, int cap) {
  std::vector<Cospan> pool;
  const int lo = size_lo(inst);
  for (int x = lo; x <= cap; ++x)
    for (int a = lo; a <= cap; ++a)
      for (int b = lo; b <= cap; ++b)
        for_each_morphism(inst, a, x, [&](const Morphism& f) {
          for_each_morphism(inst, b, x, [&](const Morphism& g) {
            pool.push_back({f, g, identity(pullback(f, g).apex)});
          });
        });
  return pool;
}

long cospan_pool_bound(const Instance& inst, int cap) {
  long total = 0;
  const int lo = size_lo(inst);
  for (int x = lo; x <= cap; ++x) {
    long per_x = 0;
    for (int a = lo; a <= cap; ++a) {
      per_x += hom_count(inst, a, x);
      if (per_x < 0) return -1;
    }
    total += per_x * per_x;
    if (total < 0) return -1;
  }
  return total;
}

Cospan sample_cospan(Rng& rng, const Instance& inst, int max_size) {
  const int lo = size_lo(inst);
  const int x = rng.range(lo, max_size);
  const int a = x == 0 && inst.kind == Kind::finset ? 0 : rng.range(lo, max_size);
  const int b = x == 0 && inst.kind == Kind::finset ? 0 : rng.range(lo, max_size);
  Morphism f = sample_morphism(rng, inst, a, x);
  Morphism g = sample_morphism(rng, inst, b, x);
  Morphism twist = sample_iso(rng, inst, pullback(f, g).apex.size);
  return {std::move(f), std::move(g), std::move(twist)};
}

// Pairs of pullback squares, exhaustive over the <= cap cospan pool with a
// budget fallback, plus sampled pairs with random apex twists.
void gen_square_pairs(const Instance& inst, const GenParams& p,
                      const std::string& tag, const CaseSink& sink) {
  const Plan pl = plan_for(p);
  if (pl.exhaustive) {
    const long bound = cospan_pool_bound(inst, pl.cap);
    const long pair_bound = bound < 0 ? -1 : (bound > 100000 ? -1 : bound * bound);
    if (exhaustive_ok(p, pair_bound)) {
      const std::vector<Cospan> pool = cospan_pool(inst, pl.cap);
      for (const Cospan& c1 : pool)
        for (const Cospan& c2 : pool) {
          CaseInputs ci;
          ci.morphisms = {{"f1", c1.f}, {"g1", c1.g}, {"w1", c1.twist},
                          {"f2", c2.f}, {"g2", c2.g}, {"w2", c2.twist}};
          sink(ci);
        }
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = rng_derive(check_key(p, tag), 1);
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const Cospan c1 = sample_cospan(rng, inst, pl.max_size);
      const Cospan c2 = sample_cospan(rng, inst, pl.max_size);
      CaseInputs ci;
      ci.morphisms = {{"f1", c1.f}, {"g1", c1.g}, {"w1", c1.twist},
                      {"f2", c2.f}, {"g2", c2.g}, {"w2", c2.twist}};
      sink(ci);
    }
  }
}

void gen_monos(const Instance& inst, const GenParams& p,
               const std::string& name, const CaseSink& sink) {
  GenParams q = p;
  q.seed = check_key(p, name);
  gen_mono(q, inst, [&](const Morphism& m) {
    CaseInputs ci;
    ci.morphisms = {{"m", m}};
    sink(ci);
  });
}

void gen_regular_epis(const Instance& inst, const GenParams& p,
                      const std::string& name, const CaseSink& sink) {
  GenParams q = p;
  q.seed = check_key(p, name);
  gen_regular_epi(q, inst, [&](const Morphism& e) {
    CaseInputs ci;
    ci.morphisms = {{"p", e}};
    sink(ci);
  });
}

void gen_all_morphisms(const Instance& inst, const GenParams& p,
                       const std::string& name, const std::string& key,
                       const CaseSink& sink) {
  GenParams q = p;
  q.seed = check_key(p, name);
  gen_morphism(q, inst, [&](const Morphism& f) {
    CaseInputs ci;
    ci.morphisms = {{key, f}};
    sink(ci);
  });
}

// dom size for a morphism into an object of size `apex`; finset needs an
// empty domain when the target is empty
int dom_into(Rng& rng, const Instance& inst, int apex, int slack) {
  if (apex == 0 && inst.kind != Kind::finvect) return 0;
  return rng.range(size_lo(inst), apex + slack);
}

// dom size for a surjection onto `cod`
int epi_dom_onto(Rng& rng, const Instance& inst, int cod, int slack) {
  if (cod == 0 && inst.kind != Kind::finvect) return 0;
  return cod + rng.range(0, slack);
}

// ---------------------------------------------------------------------------
// condition 1

bool verdict_cond1_a(const Instance& inst, const CaseInputs& ci) {
  const Morphism& u = arg(ci, "u");
  const Morphism& v = arg(ci, "v");
  if (!(u.cod == v.cod)) throw std::invalid_argument("cocone legs disagree");
  const CoproductResult cp = coproduct(u.dom, v.dom);
  const Morphism w = copair(u, v);
  if (!(compose(w, cp.inj1) == u) || !(compose(w, cp.inj2) == v)) return false;
  // uniqueness: enumerate every mediator when feasible, otherwise fall back
  // to joint surjectivity of the injections
  const long mediators = hom_count(inst, cp.obj.size, u.cod.size);
  if (mediators >= 0 && mediators <= 4096) {
    long matching = 0;
    for_each_morphism(inst, cp.obj.size, u.cod.size, [&](const Morphism& w2) {
      if (compose(w2, cp.inj1) == u && compose(w2, cp.inj2) == v) ++matching;
    });
    return matching == 1;
  }
  return is_epi(copair(cp.inj1, cp.inj2));
}

void gen_cond1_a(const Instance& inst, const GenParams& p,
                 const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const int lo = size_lo(inst);
  if (pl.exhaustive) {
    long bound = 0;
    for (int z = lo; z <= pl.cap; ++z)
      for (int a = lo; a <= pl.cap; ++a)
        for (int b = lo; b <= pl.cap; ++b)
          bound += hom_count(inst, a, z) * hom_count(inst, b, z);
    if (exhaustive_ok(p, bound)) {
      for (int z = lo; z <= pl.cap; ++z)
        for (int a = lo; a <= pl.cap; ++a)
          for (int b = lo; b <= pl.cap; ++b)
            for_each_morphism(inst, a, z, [&](const Morphism& u) {
              for_each_morphism(inst, b, z, [&](const Morphism& v) {
                CaseInputs ci;
                ci.morphisms = {{"u", u}, {"v", v}};
                sink(ci);
              });
            });
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "a_cocones");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int z = rng.range(lo, pl.max_size);
      const bool empty_target = z == 0 && inst.kind == Kind::finset;
      const int a = empty_target ? 0 : rng.range(lo, pl.max_size);
      const int b = empty_target ? 0 : rng.range(lo, pl.max_size);
      CaseInputs ci;
      ci.morphisms = {{"u", sample_morphism(rng, inst, a, z)},
                      {"v", sample_morphism(rng, inst, b, z)}};
      sink(ci);
    }
  }
}

bool verdict_cond1_b(const Instance& inst, const CaseInputs& ci) {
  (void)inst;
  const Square s1 =
      twisted_pullback_square(arg(ci, "f1"), arg(ci, "g1"), arg(ci, "w1"));
  const Square s2 =
      twisted_pullback_square(arg(ci, "f2"), arg(ci, "g2"), arg(ci, "w2"));
  return is_pullback(coproduct_of_squares(s1, s2));
}

bool verdict_cond1_c(const Instance& inst, const CaseInputs& ci) {
  (void)inst;
  return is_pullback(mono_fold_square(arg(ci, "m")));
}

bool verdict_cond1_d(const Instance& inst, const CaseInputs& ci) {
  (void)inst;
  return is_feeble_pullback(epi_fold_square(arg(ci, "p")));
}

std::vector<Check> condition1_checks() {
  return {
      Check{"a_coproduct_universal_property", gen_cond1_a, verdict_cond1_a},
      Check{"b_coproducts_of_pullbacks",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_square_pairs(inst, p, "b_coproducts_of_pullbacks", s);
            },
            verdict_cond1_b},
      Check{"c_mono_fold_pullback",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_monos(inst, p, "c_mono_fold_pullback", s);
            },
            verdict_cond1_c},
      Check{"d_regular_epi_fold_feeble",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_regular_epis(inst, p, "d_regular_epi_fold_feeble", s);
            },
            verdict_cond1_d},
  };
}

std::set<std::string> condition1_expected_failures(Kind kind) {
  if (kind == Kind::pfinset) return {"b_coproducts_of_pullbacks"};
  return {};
}

std::set<std::string> no_expected_failures(Kind) { return {}; }

// ---------------------------------------------------------------------------
// extensivity (finset)

bool verdict_ext_codiagonal(const Instance&, const CaseInputs& ci) {
  return is_pullback(codiagonal_square(arg(ci, "f")));
}

bool verdict_ext_cospan_lemma(const Instance&, const CaseInputs& ci) {
  const Morphism& f = arg(ci, "f");
  const Morphism& g = arg(ci, "g");
  const Morphism& h = arg(ci, "h");
  if (!(f.cod == g.cod) || !(f.cod == h.cod))
    throw std::invalid_argument("not a triple cospan");
  const PullbackResult pf = pullback(f, h);
  const PullbackResult pg = pullback(g, h);
  const Square sq{copair(pf.proj2, pg.proj2),
                  morphism_coproduct(pf.proj1, pg.proj1), h, copair(f, g)};
  return is_pullback(sq);
}

void gen_triple_cospans(const Instance& inst, const GenParams& p,
                        const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const int lo = size_lo(inst);
  if (pl.exhaustive) {
    long bound = 0;
    for (int x = lo; x <= pl.cap; ++x) {
      long per = 0;
      for (int a = lo; a <= pl.cap; ++a) per += hom_count(inst, a, x);
      bound += per * per * per;
    }
    if (exhaustive_ok(p, bound)) {
      for (int x = lo; x <= pl.cap; ++x)
        for (int a = lo; a <= pl.cap; ++a)
          for (int b = lo; b <= pl.cap; ++b)
            for (int c = lo; c <= pl.cap; ++c)
              for_each_morphism(inst, a, x, [&](const Morphism& f) {
                for_each_morphism(inst, b, x, [&](const Morphism& g) {
                  for_each_morphism(inst, c, x, [&](const Morphism& h) {
                    CaseInputs ci;
                    ci.morphisms = {{"f", f}, {"g", g}, {"h", h}};
                    sink(ci);
                  });
                });
              });
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "ext_cospan_lemma");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int x = rng.range(lo, pl.max_size);
      auto draw = [&] {
        const int d = (x == 0 && inst.kind == Kind::finset)
                          ? 0
                          : rng.range(lo, pl.max_size);
        return sample_morphism(rng, inst, d, x);
      };
      CaseInputs ci;
      ci.morphisms = {{"f", draw()}, {"g", draw()}, {"h", draw()}};
      sink(ci);
    }
  }
}

bool verdict_ext_coproduct_implies_pullbacks(const Instance&,
                                             const CaseInputs& ci) {
  const Morphism& f = arg(ci, "f");
  const Morphism& g = arg(ci, "g");
  const Morphism& phi = arg(ci, "phi");
  const CoproductResult cp = coproduct(f.dom, g.dom);
  if (!(phi.dom == cp.obj) || !is_iso(phi))
    throw std::invalid_argument("phi is not an iso out of the coproduct");
  const CoproductResult cp2 = coproduct(f.cod, g.cod);
  const Morphism h = compose(morphism_coproduct(f, g), inverse(phi));
  const Square sq3{compose(phi, cp.inj1), f, h, cp2.inj1};
  const Square sq4{compose(phi, cp.inj2), g, h, cp2.inj2};
  return is_pullback(sq3) && is_pullback(sq4);
}

void gen_ext_coproduct_cases(const Instance& inst, const GenParams& p,
                             const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const int lo = size_lo(inst);
  if (pl.exhaustive) {
    long per = 0;
    for (int a = lo; a <= pl.cap; ++a)
      for (int ap = lo; ap <= pl.cap; ++ap) per += hom_count(inst, a, ap);
    if (exhaustive_ok(p, per * per)) {
      for (int a = lo; a <= pl.cap; ++a)
        for (int ap = lo; ap <= pl.cap; ++ap)
          for_each_morphism(inst, a, ap, [&](const Morphism& f) {
            for (int b = lo; b <= pl.cap; ++b)
              for (int bp = lo; bp <= pl.cap; ++bp)
                for_each_morphism(inst, b, bp, [&](const Morphism& g) {
                  CaseInputs ci;
                  ci.morphisms = {{"f", f}, {"g", g},
                                  {"phi", identity(obj(inst, a + b))}};
                  sink(ci);
                });
          });
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "ext_coproduct_cases");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int a = rng.range(lo, pl.max_size), ap = rng.range(lo, pl.max_size);
      const int b = rng.range(lo, pl.max_size), bp = rng.range(lo, pl.max_size);
      if ((ap == 0 && a > 0) || (bp == 0 && b > 0)) continue;
      CaseInputs ci;
      ci.morphisms = {{"f", sample_morphism(rng, inst, a, ap)},
                      {"g", sample_morphism(rng, inst, b, bp)},
                      {"phi", sample_iso(rng, inst, a + b)}};
      sink(ci);
    }
  }
}

bool verdict_ext_pullbacks_imply_coproduct(const Instance& inst,
                                           const CaseInputs& ci) {
  const Morphism& h = arg(ci, "h");
  const ObjHandle aprime = obj(inst, obj_arg(ci, "Aprime"));
  const ObjHandle bprime = obj(inst, obj_arg(ci, "Bprime"));
  const CoproductResult cp = coproduct(aprime, bprime);
  if (!(h.cod == cp.obj))
    throw std::invalid_argument("h does not land in the named coproduct");
  const PullbackResult p3 = pullback(cp.inj1, h);
  const PullbackResult p4 = pullback(cp.inj2, h);
  return is_iso(copair(p3.proj2, p4.proj2));
}

void gen_ext_pullback_cases(const Instance& inst, const GenParams& p,
                            const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const int lo = size_lo(inst);
  if (pl.exhaustive) {
    long bound = 0;
    for (int ap = lo; ap <= pl.cap; ++ap)
      for (int bp = lo; bp <= pl.cap; ++bp)
        for (int c = lo; c <= ap + bp; ++c)
          bound += hom_count(inst, c, ap + bp);
    if (exhaustive_ok(p, bound)) {
      for (int ap = lo; ap <= pl.cap; ++ap)
        for (int bp = lo; bp <= pl.cap; ++bp)
          for (int c = lo; c <= ap + bp; ++c)
            for_each_morphism(inst, c, ap + bp, [&](const Morphism& h) {
              CaseInputs ci;
              ci.morphisms = {{"h", h}};
              ci.objects = {{"Aprime", ap}, {"Bprime", bp}};
              sink(ci);
            });
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "ext_pullback_cases");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int ap = rng.range(lo, pl.max_size), bp = rng.range(lo, pl.max_size);
      const int c = dom_into(rng, inst, ap + bp, 2);
      CaseInputs ci;
      ci.morphisms = {{"h", sample_morphism(rng, inst, c, ap + bp)}};
      ci.objects = {{"Aprime", ap}, {"Bprime", bp}};
      sink(ci);
    }
  }
}

bool verdict_ext_strict_initial(const Instance& inst, const CaseInputs& ci) {
  const int n = obj_arg(ci, "A");
  long count = 0;
  bool iso = false;
  for_each_morphism(inst, n, 0, [&](const Morphism& m) {
    ++count;
    iso = is_iso(m);
  });
  return n == 0 ? (count == 1 && iso) : count == 0;
}

std::vector<Check> extensivity_checks() {
  return {
      Check{"ext_codiagonal_pullback",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_all_morphisms(inst, p, "ext_codiagonal_pullback", "f", s);
            },
            verdict_ext_codiagonal},
      Check{"ext_cospan_lemma", gen_triple_cospans, verdict_ext_cospan_lemma},
      Check{"ext_mono_fold_pullback",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_monos(inst, p, "ext_mono_fold_pullback", s);
            },
            verdict_cond1_c},
      Check{"ext_coproduct_implies_pullbacks", gen_ext_coproduct_cases,
            verdict_ext_coproduct_implies_pullbacks},
      Check{"ext_pullbacks_imply_coproduct", gen_ext_pullback_cases,
            verdict_ext_pullbacks_imply_coproduct},
      Check{"ext_strict_initial",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              (void)inst;
              for (int n = 0; n <= p.max_size; ++n) {
                CaseInputs ci;
                ci.objects = {{"A", n}};
                s(ci);
              }
            },
            verdict_ext_strict_initial},
  };
}

// ---------------------------------------------------------------------------
// additivity (finvect)

bool verdict_add_witness(const Instance&, const CaseInputs& ci) {
  const Morphism& p = arg(ci, "p");
  const Square sq = epi_fold_square(p);
  return is_feeble_pullback(sq) && !is_pullback(sq);
}

void gen_noninjective_epis(const Instance& inst, const GenParams& p,
                           const CaseSink& sink) {
  const Plan pl = plan_for(p);
  if (pl.exhaustive) {
    long bound = 0;
    for (int d = 1; d <= pl.cap; ++d)
      for (int c = size_lo(inst); c < d; ++c) bound += hom_count(inst, d, c);
    if (exhaustive_ok(p, bound)) {
      for (int d = 1; d <= pl.cap; ++d)
        for (int c = size_lo(inst); c < d; ++c)
          for_each_regular_epi(inst, d, c, [&](const Morphism& e) {
            CaseInputs ci;
            ci.morphisms = {{"p", e}};
            sink(ci);
          });
    }
  }
  if (pl.sampled && pl.max_size >= 1) {
    const std::uint64_t key = check_key(p, "add_witness");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int d = rng.range(1, pl.max_size);
      const int c = rng.range(size_lo(inst), d - 1);
      CaseInputs ci;
      ci.morphisms = {{"p", sample_regular_epi(rng, inst, d, c)}};
      sink(ci);
    }
  }
}

bool verdict_add_biproduct_squares(const Instance& inst,
                                   const CaseInputs& ci) {
  const ObjHandle a = obj(inst, obj_arg(ci, "A"));
  const ObjHandle b = obj(inst, obj_arg(ci, "B"));
  const ObjHandle z = terminal_obj(inst);
  const Morphism ta = to_terminal(a), tb = to_terminal(b);
  const Morphism idz = identity(z);
  const Square left{identity(a), ta, ta, idz};
  const Square middle{tb, identity(b), idz, tb};
  const Square right_sq{copair(identity(a), zero_morphism(b, a)),
                        copair(zero_morphism(a, b), identity(b)), ta, tb};
  return is_pullback(left) && is_pullback(middle) && is_pullback(right_sq);
}

bool verdict_add_shear(const Instance& inst, const CaseInputs& ci) {
  const ObjHandle a = obj(inst, obj_arg(ci, "A"));
  const ProductResult pr = product(a, a);
  return is_iso(pair(fold(a), pr.proj2));
}

std::vector<Check> additivity_checks() {
  return {
      Check{"add_a1_mono_fold_pullback",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_monos(inst, p, "add_a1_mono_fold_pullback", s);
            },
            verdict_cond1_c},
      Check{"add_a2_fold_feeble",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_regular_epis(inst, p, "add_a2_fold_feeble", s);
            },
            verdict_cond1_d},
      Check{"add_a2_feeble_not_pullback_witness", gen_noninjective_epis,
            verdict_add_witness},
      Check{"add_a3_coproducts_of_pullbacks",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_square_pairs(inst, p, "add_a3_coproducts_of_pullbacks", s);
            },
            verdict_cond1_b},
      Check{"add_biproduct_squares",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              (void)inst;
              for (int a = 0; a <= p.max_size; ++a)
                for (int b = 0; b <= p.max_size; ++b) {
                  CaseInputs ci;
                  ci.objects = {{"A", a}, {"B", b}};
                  s(ci);
                }
            },
            verdict_add_biproduct_squares},
      Check{"add_shear_map_invertible",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              (void)inst;
              for (int a = 0; a <= p.max_size; ++a) {
                CaseInputs ci;
                ci.objects = {{"A", a}};
                s(ci);
              }
            },
            verdict_add_shear},
  };
}

// ---------------------------------------------------------------------------
// feeble calculus (finset, finvect)

enum class UMode { arbitrary, surjective, identity };

Morphism draw_u(Rng& rng, const Instance& inst, const ObjHandle& apex,
                UMode mode) {
  switch (mode) {
    case UMode::identity:
      return identity(apex);
    case UMode::surjective:
      return sample_regular_epi(rng, inst,
                                epi_dom_onto(rng, inst, apex.size, 2),
                                apex.size);
    case UMode::arbitrary:
      return sample_morphism(rng, inst, dom_into(rng, inst, apex.size, 2),
                             apex.size);
  }
  throw std::logic_error("bad UMode");
}

// Draws a composable pair of commuting squares via morphisms into canonical
// pullback apexes; u2 fixes the shared middle column.  Sizes are drawn
// codomain-first so empty finset objects stay consistent along the row.
CaseInputs draw_paste_case(Rng& rng, const Instance& inst, int max_size,
                           bool bot1_epi, UMode mode2, UMode mode1) {
  const int lo = size_lo(inst);
  const bool fin = inst.kind == Kind::finset;
  const int cp = rng.range(lo, max_size);
  const int bp = (fin && cp == 0) ? 0 : rng.range(lo, max_size);
  int ap;
  if (bot1_epi)
    ap = (fin && bp == 0) ? 0 : bp + rng.range(0, std::max(0, max_size - bp));
  else
    ap = (fin && bp == 0) ? 0 : rng.range(lo, max_size);
  const Morphism bot1 = bot1_epi ? sample_regular_epi(rng, inst, ap, bp)
                                 : sample_morphism(rng, inst, ap, bp);
  const Morphism bot2 = sample_morphism(rng, inst, bp, cp);
  const Morphism gamma =
      sample_morphism(rng, inst, dom_into(rng, inst, cp, 2), cp);
  const PullbackResult p2 = pullback(bot2, gamma);
  const Morphism u2 = draw_u(rng, inst, p2.apex, mode2);
  const Morphism beta = compose(p2.proj1, u2);
  const PullbackResult p1 = pullback(bot1, beta);
  const Morphism u1 = draw_u(rng, inst, p1.apex, mode1);
  CaseInputs ci;
  ci.morphisms = {{"bot1", bot1}, {"bot2", bot2}, {"gamma", gamma},
                  {"u2", u2}, {"u1", u1}};
  return ci;
}

struct PasteSquares {
  Square sq1, sq2, paste;
};

PasteSquares rebuild_paste(const CaseInputs& ci) {
  const Square sq2 = scaffold_square(arg(ci, "bot2"), arg(ci, "gamma"),
                                     arg(ci, "u2"));
  const Square sq1 = scaffold_square(arg(ci, "bot1"), sq2.left, arg(ci, "u1"));
  return {sq1, sq2, paste_horizontal(sq1, sq2)};
}

// The pasting-law checks are always sampled: the scaffold space has no
// useful small exhaustive closure.
void gen_paste_cases(const Instance& inst, const GenParams& p,
                     const std::string& tag, bool bot1_epi, UMode mode2,
                     UMode mode1, bool mix_arbitrary, const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const std::uint64_t key = check_key(p, tag);
  for (int i = 0; i < pl.samples; ++i) {
    Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
    UMode m2 = mode2, m1 = mode1;
    if (mix_arbitrary && i % 2 == 1) {
      m2 = UMode::arbitrary;
      m1 = UMode::arbitrary;
    }
    sink(draw_paste_case(rng, inst, pl.max_size, bot1_epi, m2, m1));
  }
}

bool verdict_paste_both(const Instance&, const CaseInputs& ci) {
  const PasteSquares ps = rebuild_paste(ci);
  if (!is_feeble_pullback(ps.sq1) || !is_feeble_pullback(ps.sq2)) return true;
  return is_feeble_pullback(ps.paste);
}

bool verdict_paste_right_pullback_iff(const Instance&, const CaseInputs& ci) {
  const PasteSquares ps = rebuild_paste(ci);
  if (!is_pullback(ps.sq2)) return true;  // hypothesis off: vacuous
  return is_feeble_pullback(ps.sq1) == is_feeble_pullback(ps.paste);
}

bool verdict_paste_left_regular_epi(const Instance&, const CaseInputs& ci) {
  const PasteSquares ps = rebuild_paste(ci);
  if (!is_feeble_pullback(ps.paste) || !is_regular_epi(arg(ci, "bot1")))
    return true;
  return is_feeble_pullback(ps.sq2);
}

bool verdict_jointly_monic_upgrade(const Instance&, const CaseInputs& ci) {
  const Square sq =
      scaffold_square(arg(ci, "bottom"), arg(ci, "right"), arg(ci, "u"));
  if (!is_feeble_pullback(sq) || !is_jointly_monic(sq.left, sq.top))
    return true;
  return is_pullback(sq);
}

void gen_single_scaffolds(const Instance& inst, const GenParams& p,
                          const std::string& tag, const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const std::uint64_t key = check_key(p, tag);
  const int lo = size_lo(inst);
  for (int i = 0; i < pl.samples; ++i) {
    Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
    const int bp = rng.range(lo, pl.max_size);
    const Morphism bottom = sample_morphism(
        rng, inst, (bp == 0 && inst.kind == Kind::finset) ? 0 : rng.range(lo, pl.max_size),
        bp);
    const Morphism right = sample_morphism(
        rng, inst, (bp == 0 && inst.kind == Kind::finset) ? 0 : rng.range(lo, pl.max_size),
        bp);
    const PullbackResult pb = pullback(bottom, right);
    const UMode mode = i % 3 == 0 ? UMode::arbitrary
                       : i % 3 == 1 ? UMode::surjective : UMode::identity;
    CaseInputs ci;
    ci.morphisms = {{"bottom", bottom}, {"right", right},
                    {"u", draw_u(rng, inst, pb.apex, mode)}};
    sink(ci);
  }
}

bool verdict_feeble_coproduct_stability(const Instance&, const CaseInputs& ci) {
  const Square sa =
      scaffold_square(arg(ci, "bot_a"), arg(ci, "right_a"), arg(ci, "u_a"));
  const Square sb =
      scaffold_square(arg(ci, "bot_b"), arg(ci, "right_b"), arg(ci, "u_b"));
  if (!is_feeble_pullback(sa) || !is_feeble_pullback(sb)) return true;
  return is_feeble_pullback(coproduct_of_squares(sa, sb));
}

void gen_scaffold_pairs(const Instance& inst, const GenParams& p,
                        const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const std::uint64_t key = check_key(p, "feeble_coproduct_stability");
  const int lo = size_lo(inst);
  for (int i = 0; i < pl.samples; ++i) {
    Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
    auto one = [&](const char* b, const char* r, const char* u,
                   CaseInputs& ci) {
      const int bp = rng.range(lo, pl.max_size);
      const Morphism bottom = sample_morphism(
          rng, inst, (bp == 0 && inst.kind == Kind::finset) ? 0 : rng.range(lo, pl.max_size),
          bp);
      const Morphism right = sample_morphism(
          rng, inst, (bp == 0 && inst.kind == Kind::finset) ? 0 : rng.range(lo, pl.max_size),
          bp);
      const PullbackResult pb = pullback(bottom, right);
      ci.morphisms.emplace(b, bottom);
      ci.morphisms.emplace(r, right);
      ci.morphisms.emplace(u,
                           draw_u(rng, inst, pb.apex, UMode::surjective));
    };
    CaseInputs ci;
    one("bot_a", "right_a", "u_a", ci);
    one("bot_b", "right_b", "u_b", ci);
    sink(ci);
  }
}

std::vector<Check> feeble_calculus_checks() {
  return {
      Check{"feeble_paste_both",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_paste_cases(inst, p, "feeble_paste_both", false,
                              UMode::surjective, UMode::surjective, true, s);
            },
            verdict_paste_both},
      Check{"feeble_paste_right_pullback_iff",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_paste_cases(inst, p, "feeble_paste_right_pullback_iff",
                              false, UMode::identity, UMode::arbitrary, false,
                              s);
            },
            verdict_paste_right_pullback_iff},
      Check{"feeble_paste_left_regular_epi",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_paste_cases(inst, p, "feeble_paste_left_regular_epi", true,
                              UMode::surjective, UMode::surjective, true, s);
            },
            verdict_paste_left_regular_epi},
      Check{"feeble_jointly_monic_upgrade",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_single_scaffolds(inst, p, "feeble_jointly_monic_upgrade", s);
            },
            verdict_jointly_monic_upgrade},
      Check{"feeble_coproduct_stability", gen_scaffold_pairs,
            verdict_feeble_coproduct_stability},
  };
}

// ---------------------------------------------------------------------------
// exact consequences (finset, finvect)

bool verdict_exact_reflexive_closure(const Instance&, const CaseInputs& ci) {
  const Morphism& m = arg(ci, "m");
  const Relation rel{arg(ci, "r1"), arg(ci, "r2")};
  const ReflexiveClosureResult rc = reflexive_closure(m, rel);
  const Morphism expected =
      copair(pair(compose(m, rel.r1), compose(m, rel.r2)),
             pair(identity(m.cod), identity(m.cod)));
  return is_equivalence_relation(rc.closure) &&
         compose(relation_pairing(rc.closure), rc.cover) == expected;
}

void gen_mono_with_relation(const Instance& inst, const GenParams& p,
                            const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const int lo = size_lo(inst);
  if (pl.exhaustive) {
    long bound = 0;
    for (int s = lo; s <= pl.cap; ++s)
      for (int a = s; a <= pl.cap; ++a)
        bound += hom_count(inst, s, a) *
                 (inst.kind == Kind::finvect
                      ? hom_count(inst, s, s)   // coarse subspace bound
                      : bell_number(s));
    if (exhaustive_ok(p, bound)) {
      for (int s = lo; s <= pl.cap; ++s)
        for (int a = s; a <= pl.cap; ++a)
          for_each_mono(inst, s, a, [&](const Morphism& m) {
            for_each_equivalence_relation(inst, s, [&](const Relation& rel) {
              CaseInputs ci;
              ci.morphisms = {{"m", m}, {"r1", rel.r1}, {"r2", rel.r2}};
              sink(ci);
            });
          });
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "exact_reflexive_closure");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int a = rng.range(lo, pl.max_size);
      const int s = rng.range(lo, a);
      const Morphism m = sample_mono(rng, inst, s, a);
      const Relation rel = sample_equivalence_relation(rng, inst, s);
      CaseInputs ci;
      ci.morphisms = {{"m", m}, {"r1", rel.r1}, {"r2", rel.r2}};
      sink(ci);
    }
  }
}

bool check_pushout(const PushoutResult& po) {
  return square_commutes(po.square) && is_iso(po.comparison) &&
         is_pullback(po.square) && is_mono(po.square.right);
}

bool verdict_pushout_regular_epi(const Instance&, const CaseInputs& ci) {
  return check_pushout(
      pushout_mono_along_regular_epi(arg(ci, "m"), arg(ci, "e")));
}

void gen_mono_epi_spans(const Instance& inst, const GenParams& p,
                        const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const int lo = size_lo(inst);
  if (pl.exhaustive) {
    long bound = 0;
    for (int s = lo; s <= pl.cap; ++s)
      for (int a = s; a <= pl.cap; ++a)
        for (int t = lo; t <= s; ++t)
          bound += hom_count(inst, s, a) * hom_count(inst, s, t);
    if (exhaustive_ok(p, bound)) {
      for (int s = lo; s <= pl.cap; ++s)
        for (int a = s; a <= pl.cap; ++a)
          for_each_mono(inst, s, a, [&](const Morphism& m) {
            for (int t = lo; t <= s; ++t)
              for_each_regular_epi(inst, s, t, [&](const Morphism& e) {
                CaseInputs ci;
                ci.morphisms = {{"m", m}, {"e", e}};
                sink(ci);
              });
          });
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "exact_pushout_regular_epi");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int s = rng.range(lo, pl.max_size);
      const int a = rng.range(s, pl.max_size);
      const int t = (inst.kind != Kind::finvect && s > 0) ? rng.range(1, s)
                                                          : rng.range(lo, s);
      CaseInputs ci;
      ci.morphisms = {{"m", sample_mono(rng, inst, s, a)},
                      {"e", sample_regular_epi(rng, inst, s, t)}};
      sink(ci);
    }
  }
}

bool verdict_pushout_coproduct_inclusion(const Instance& inst,
                                         const CaseInputs& ci) {
  return check_pushout(pushout_mono_along_coproduct_inclusion(
      arg(ci, "n"), obj(inst, obj_arg(ci, "A"))));
}

void gen_mono_with_object(const Instance& inst, const GenParams& p,
                          const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const int lo = size_lo(inst);
  if (pl.exhaustive) {
    long bound = 0;
    for (int s = lo; s <= pl.cap; ++s)
      for (int b = s; b <= pl.cap; ++b)
        bound += hom_count(inst, s, b) * (pl.cap - lo + 1);
    if (exhaustive_ok(p, bound)) {
      for (int s = lo; s <= pl.cap; ++s)
        for (int b = s; b <= pl.cap; ++b)
          for_each_mono(inst, s, b, [&](const Morphism& n) {
            for (int a = lo; a <= pl.cap; ++a) {
              CaseInputs ci;
              ci.morphisms = {{"n", n}};
              ci.objects = {{"A", a}};
              sink(ci);
            }
          });
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "exact_pushout_coproduct_incl");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int s = rng.range(lo, pl.max_size);
      const int b = rng.range(s, pl.max_size);
      CaseInputs ci;
      ci.morphisms = {{"n", sample_mono(rng, inst, s, b)}};
      ci.objects = {{"A", rng.range(lo, pl.max_size)}};
      sink(ci);
    }
  }
}

bool verdict_pushout_general(const Instance&, const CaseInputs& ci) {
  return check_pushout(pushout_mono_general(arg(ci, "m"), arg(ci, "f")));
}

void gen_mono_any_spans(const Instance& inst, const GenParams& p,
                        const CaseSink& sink) {
  const Plan pl = plan_for(p);
  const int lo = size_lo(inst);
  if (pl.exhaustive) {
    long bound = 0;
    for (int s = lo; s <= pl.cap; ++s)
      for (int a = s; a <= pl.cap; ++a)
        for (int b = lo; b <= pl.cap; ++b)
          bound += hom_count(inst, s, a) * hom_count(inst, s, b);
    if (exhaustive_ok(p, bound)) {
      for (int s = lo; s <= pl.cap; ++s)
        for (int a = s; a <= pl.cap; ++a)
          for_each_mono(inst, s, a, [&](const Morphism& m) {
            for (int b = lo; b <= pl.cap; ++b)
              for_each_morphism(inst, s, b, [&](const Morphism& f) {
                CaseInputs ci;
                ci.morphisms = {{"m", m}, {"f", f}};
                sink(ci);
              });
          });
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "exact_pushout_general");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int s = rng.range(lo, pl.max_size);
      const int a = rng.range(s, pl.max_size);
      const int b = (s > 0 && inst.kind == Kind::finset)
                        ? rng.range(1, pl.max_size)
                        : rng.range(lo, pl.max_size);
      CaseInputs ci;
      ci.morphisms = {{"m", sample_mono(rng, inst, s, a)},
                      {"f", sample_morphism(rng, inst, s, b)}};
      sink(ci);
    }
  }
}

bool verdict_monos_regular(const Instance&, const CaseInputs& ci) {
  const Morphism& m = arg(ci, "m");
  const Corelation ck = cokernel_pair(m);
  return image_equal(m, equalizer(ck.q1, ck.q2));
}

bool verdict_balanced(const Instance&, const CaseInputs& ci) {
  const Morphism& f = arg(ci, "f");
  if (!is_mono(f) || !is_epi(f)) return true;
  return is_iso(f);
}

std::vector<Check> exact_consequences_checks() {
  return {
      Check{"exact_reflexive_closure", gen_mono_with_relation,
            verdict_exact_reflexive_closure},
      Check{"exact_pushout_along_regular_epi", gen_mono_epi_spans,
            verdict_pushout_regular_epi},
      Check{"exact_pushout_along_coproduct_inclusion", gen_mono_with_object,
            verdict_pushout_coproduct_inclusion},
      Check{"exact_pushout_general", gen_mono_any_spans,
            verdict_pushout_general},
      Check{"exact_monos_regular",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_monos(inst, p, "exact_monos_regular", s);
            },
            verdict_monos_regular},
      Check{"exact_balanced",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_all_morphisms(inst, p, "exact_balanced", "f", s);
            },
            verdict_balanced},
  };
}

// ---------------------------------------------------------------------------
// coexactness (finset, finvect)

bool verdict_corelations_coeffective(const Instance&, const CaseInputs& ci) {
  return corelation_is_coeffective(
      Corelation{arg(ci, "q1"), arg(ci, "q2"), arg(ci, "e")});
}

bool verdict_cokernel_pairs_coeffective(const Instance&,
                                        const CaseInputs& ci) {
  return corelation_is_coeffective(cokernel_pair(arg(ci, "f")));
}

std::vector<Check> coexactness_checks() {
  return {
      Check{"coexact_reflexive_corelations",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              GenParams q = p;
              q.seed = check_key(p, "coexact_reflexive_corelations");
              gen_reflexive_corelation(q, inst, [&](const Corelation& c) {
                CaseInputs ci;
                ci.morphisms = {{"q1", c.q1}, {"q2", c.q2},
                                {"e", c.retraction}};
                s(ci);
              });
            },
            verdict_corelations_coeffective},
      Check{"coexact_cokernel_pairs",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              gen_all_morphisms(inst, p, "coexact_cokernel_pairs", "f", s);
            },
            verdict_cokernel_pairs_coeffective},
  };
}

// ---------------------------------------------------------------------------
// coprotomodularity (finset, finvect)

void gen_proto_cases(const Instance& inst, const GenParams& p,
                     const CaseSink& sink) {
  GenParams q = p;
  q.seed = check_key(p, "coproto_scenarios");
  gen_proto_scenario(q, inst, [&](const Morphism& alpha, const Morphism& f) {
    CaseInputs ci;
    ci.morphisms = {{"alpha", alpha}, {"f", f}};
    sink(ci);
  });
}

bool verdict_coproto_forward(const Instance&, const CaseInputs& ci) {
  const CoprotoVerdict v =
      evaluate_coprotomodularity_case(arg(ci, "alpha"), arg(ci, "f"));
  return !v.h_is_iso || v.f_is_iso;
}

bool verdict_coproto_backward(const Instance&, const CaseInputs& ci) {
  const CoprotoVerdict v =
      evaluate_coprotomodularity_case(arg(ci, "alpha"), arg(ci, "f"));
  return !v.f_is_iso || v.h_is_iso;
}

std::vector<Check> coprotomodularity_checks() {
  return {
      Check{"coproto_h_iso_implies_f_iso", gen_proto_cases,
            verdict_coproto_forward},
      Check{"coproto_f_iso_implies_h_iso", gen_proto_cases,
            verdict_coproto_backward},
  };
}

// ---------------------------------------------------------------------------
// coherence / arithmetical (finset)

std::vector<Morphism> subset_monos(const Instance& inst, int n) {
  std::vector<Morphism> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) elems.push_back(i);
    out.push_back(Morphism{obj(inst, static_cast<int>(elems.size())),
                           obj(inst, n), std::move(elems)});
  }
  return out;
}

bool verdict_coh_joins(const Instance&, const CaseInputs& ci) {
  const Morphism& f = arg(ci, "f");
  const Morphism& s = arg(ci, "s");
  const Morphism& t = arg(ci, "t");
  const Morphism lhs = subobject_pullback(f, subobject_join(s, t));
  const Morphism rhs = subobject_join(subobject_pullback(f, s),
                                      subobject_pullback(f, t));
  return image_equal(lhs, rhs);
}

void gen_coh_join_cases(const Instance& inst, const GenParams& p,
                        const CaseSink& sink) {
  const Plan pl = plan_for(p);
  if (pl.exhaustive) {
    long bound = 0;
    for (int a = 0; a <= pl.cap; ++a)
      for (int b = 0; b <= pl.cap; ++b)
        bound += hom_count(inst, a, b) * (1L << b) * (1L << b);
    if (exhaustive_ok(p, bound)) {
      for (int b = 0; b <= pl.cap; ++b) {
        const std::vector<Morphism> subs = subset_monos(inst, b);
        for (int a = 0; a <= pl.cap; ++a)
          for_each_morphism(inst, a, b, [&](const Morphism& f) {
            for (const Morphism& s : subs)
              for (const Morphism& t : subs) {
                CaseInputs ci;
                ci.morphisms = {{"f", f}, {"s", s}, {"t", t}};
                sink(ci);
              }
          });
      }
    }
  }
  if (pl.sampled) {
    const std::uint64_t key = check_key(p, "coh_pullback_preserves_joins");
    for (int i = 0; i < pl.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      const int b = rng.range(0, pl.max_size);
      const int a = (b == 0) ? 0 : rng.range(0, pl.max_size);
      const std::vector<Morphism> subs = subset_monos(inst, b);
      CaseInputs ci;
      ci.morphisms = {{"f", sample_morphism(rng, inst, a, b)},
                      {"s", subs[rng.below(static_cast<int>(subs.size()))]},
                      {"t", subs[rng.below(static_cast<int>(subs.size()))]}};
      sink(ci);
    }
  }
}

bool verdict_coh_distributive(const Instance& inst, const CaseInputs& ci) {
  const SubobjectLattice lat =
      subobject_lattice(obj(inst, obj_arg(ci, "A")));
  const int k = static_cast<int>(lat.subs.size());
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if (lat.meet[x][lat.join[y][z]] !=
            lat.join[lat.meet[x][y]][lat.meet[x][z]])
          return false;
  return true;
}

bool verdict_coh_initial_mono(const Instance& inst, const CaseInputs&) {
  const Morphism u = from_initial(terminal_obj(inst));
  const PullbackResult kp = kernel_pair(u);
  return is_mono(u) && is_iso(kp.proj1) && is_iso(kp.proj2);
}

std::vector<Check> coherence_checks() {
  return {
      Check{"coh_pullback_preserves_joins", gen_coh_join_cases,
            verdict_coh_joins},
      Check{"coh_subobject_distributive",
            [](const Instance& inst, const GenParams& p, const CaseSink& s) {
              (void)inst;
              for (int a = 0; a <= std::min(p.max_size, 6); ++a) {
                CaseInputs ci;
                ci.objects = {{"A", a}};
                s(ci);
              }
            },
            verdict_coh_distributive},
      Check{"coh_initial_mono",
            [](const Instance&, const GenParams&, const CaseSink& s) {
              s(CaseInputs{});
            },
            verdict_coh_initial_mono},
  };
}

}  // namespace

// ---------------------------------------------------------------------------
// registry

const std::vector<SuiteDef>& suite_registry() {
  static const std::vector<SuiteDef> registry = {
      {"condition1", {Kind::finset, Kind::finvect, Kind::pfinset},
       &condition1_checks, &condition1_expected_failures},
      {"extensivity", {Kind::finset}, &extensivity_checks,
       &no_expected_failures},
      {"additivity", {Kind::finvect}, &additivity_checks,
       &no_expected_failures},
      {"feeble_calculus", {Kind::finset, Kind::finvect},
       &feeble_calculus_checks, &no_expected_failures},
      {"exact_consequences", {Kind::finset, Kind::finvect},
       &exact_consequences_checks, &no_expected_failures},
      {"coexactness", {Kind::finset, Kind::finvect}, &coexactness_checks,
       &no_expected_failures},
      {"coprotomodularity", {Kind::finset, Kind::finvect},
       &coprotomodularity_checks, &no_expected_failures},
      {"coherence_arithmetical", {Kind::finset}, &coherence_checks,
       &no_expected_failures},
  };
  return registry;
}

const SuiteDef* find_suite(const std::string& name) {
  for (const SuiteDef& def : suite_registry())
    if (def.name == name) return &def;
  return nullptr;
}

bool suite_applicable(const SuiteDef& def, Kind kind) {
  for (Kind k : def.applicable)
    if (k == kind) return true;
  return false;
}

std::vector<std::string> suites_for(Kind kind) {
  std::vector<std::string> out;
  for (const SuiteDef& def : suite_registry())
    if (suite_applicable(def, kind)) out.push_back(def.name);
  return out;
}

SuiteReport run_suite(const std::string& suite, const Instance& inst,
                      const GenParams& params) {
  const SuiteDef* def = find_suite(suite);
  if (!def) throw std::invalid_argument("unknown suite: " + suite);
  if (!suite_applicable(*def, inst.kind))
    throw std::invalid_argument("suite " + suite + " not applicable to " +
                                instance_name(inst));
  SuiteReport report;
  report.suite = suite;
  report.instance = inst;
  report.params = params;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Check& check : def->make_checks()) {
    CheckResult res;
    res.name = check.name;
    check.generate(inst, params, [&](const CaseInputs& ci) {
      ++res.cases;
      if (!check.verdict(inst, ci)) {
        if (res.failures == 0) res.counterexample = ci;
        ++res.failures;
      }
    });
    report.checks.push_back(std::move(res));
  }
  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  return report;
}

const Check* find_check(const std::string& name) {
  static const std::map<std::string, Check> all = [] {
    std::map<std::string, Check> m;
    for (const SuiteDef& def : suite_registry())
      for (Check& c : def.make_checks()) m.emplace(c.name, std::move(c));
    return m;
  }();
  const auto it = all.find(name);
  return it == all.end() ? nullptr : &it->second;
}

}  // namespace catcheck

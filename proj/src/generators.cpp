#include "catcheck/generators.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <numeric>

#include "catcheck/linalg.hpp"

namespace catcheck {

std::string mode_name(GenMode mode) {
  switch (mode) {
    case GenMode::exhaustive: return "exhaustive";
    case GenMode::sampled: return "sampled";
    case GenMode::both: return "both";
  }
  return "?";
}

GenMode parse_mode(const std::string& name) {
  if (name == "exhaustive") return GenMode::exhaustive;
  if (name == "sampled") return GenMode::sampled;
  if (name == "both") return GenMode::both;
  throw std::invalid_argument("unknown mode: " + name);
}

int both_exhaustive_cap() { return 3; }

std::uint64_t rng_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rng_at(std::uint64_t key, std::uint64_t counter) {
  return rng_mix(key + 0x9E3779B97F4A7C15ULL * (counter + 1));
}

std::uint64_t rng_derive(std::uint64_t key, std::uint64_t tag) {
  return rng_at(key, tag);
}

std::uint64_t rng_tag(const std::string& name) {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a 64
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

int Rng::below(int n) {
  if (n <= 0) throw std::invalid_argument("Rng::below needs n >= 1");
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

int Rng::range(int lo, int hi) { return lo + below(hi - lo + 1); }

long exhaustive_budget_cases() {
  long ms = 10000;
  if (const char* env = std::getenv("CATCHECK_BUDGET_MS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) ms = v;
  }
  // assumed desk rate: 1000 cases per millisecond
  long cases = ms > LONG_MAX / 1000 ? LONG_MAX : ms * 1000;
  return cases;
}

int min_object_size(const Instance& inst) {
  return inst.kind == Kind::pfinset ? 1 : 0;
}

namespace {

long sat_mul(long a, long b) {
  if (a == 0 || b == 0) return 0;
  if (a > LONG_MAX / b) return LONG_MAX;
  return a * b;
}

long sat_pow(long base, long exp) {
  long r = 1;
  for (long i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace

long hom_count(const Instance& inst, int dom, int cod) {
  switch (inst.kind) {
    case Kind::finset:
      if (dom == 0) return 1;
      return sat_pow(cod, dom);
    case Kind::pfinset:
      return sat_pow(cod, dom - 1);
    case Kind::finvect:
      return sat_pow(inst.prime, static_cast<long>(dom) * cod);
  }
  return 0;
}

void for_each_morphism(const Instance& inst, int dom, int cod,
                       const MorphismSink& fn) {
  const ObjHandle d = obj(inst, dom), c = obj(inst, cod);
  if (inst.kind == Kind::finvect) {
    const long total = hom_count(inst, dom, cod);
    std::vector<int> entries(static_cast<size_t>(dom) * cod, 0);
    for (long code = 0; code < total; ++code) {
      fn(Morphism{d, c, entries});
      // base-p increment, last entry fastest
      for (int i = static_cast<int>(entries.size()) - 1; i >= 0; --i) {
        if (++entries[i] < inst.prime) break;
        entries[i] = 0;
      }
    }
    return;
  }
  if (cod == 0) {
    if (dom == 0) fn(Morphism{d, c, {}});
    return;
  }
  const int fixed = inst.kind == Kind::pfinset ? 1 : 0;
  std::vector<int> table(dom, 0);
  const long total = hom_count(inst, dom, cod);
  for (long code = 0; code < total; ++code) {
    fn(Morphism{d, c, table});
    for (int i = dom - 1; i >= fixed; --i) {
      if (++table[i] < cod) break;
      table[i] = 0;
    }
  }
}

void for_each_mono(const Instance& inst, int dom, int cod,
                   const MorphismSink& fn) {
  if (dom > cod) return;  // unsatisfiable shape
  for_each_morphism(inst, dom, cod, [&](const Morphism& m) {
    if (is_mono(m)) fn(m);
  });
}

void for_each_regular_epi(const Instance& inst, int dom, int cod,
                          const MorphismSink& fn) {
  if (cod > dom) return;
  for_each_morphism(inst, dom, cod, [&](const Morphism& m) {
    if (is_regular_epi(m)) fn(m);
  });
}

void for_each_iso(const Instance& inst, int n, const MorphismSink& fn) {
  for_each_morphism(inst, n, n, [&](const Morphism& m) {
    if (is_iso(m)) fn(m);
  });
}

Morphism sample_morphism(Rng& rng, const Instance& inst, int dom, int cod) {
  const ObjHandle d = obj(inst, dom), c = obj(inst, cod);
  if (inst.kind == Kind::finvect) {
    std::vector<int> e(static_cast<size_t>(dom) * cod);
    for (int& v : e) v = rng.below(inst.prime);
    return Morphism{d, c, std::move(e)};
  }
  if (cod == 0) {
    if (dom != 0) throw std::invalid_argument("no morphisms into 0");
    return Morphism{d, c, {}};
  }
  std::vector<int> t(dom);
  for (int i = 0; i < dom; ++i) t[i] = rng.below(cod);
  if (inst.kind == Kind::pfinset && dom >= 1) t[0] = 0;
  return Morphism{d, c, std::move(t)};
}

Morphism sample_mono(Rng& rng, const Instance& inst, int dom, int cod) {
  if (dom > cod) throw std::invalid_argument("no mono with |dom| > |cod|");
  const ObjHandle d = obj(inst, dom), c = obj(inst, cod);
  if (inst.kind == Kind::finvect) {
    for (int tries = 0; tries < 100; ++tries) {
      Morphism m = sample_morphism(rng, inst, dom, cod);
      if (is_mono(m)) return m;
    }
    // deterministic fallback: the block inclusion
    std::vector<int> e(static_cast<size_t>(dom) * cod, 0);
    for (int i = 0; i < dom; ++i) e[static_cast<size_t>(i) * dom + i] = 1;
    return Morphism{d, c, std::move(e)};
  }
  const int fixed = inst.kind == Kind::pfinset ? 1 : 0;
  std::vector<int> avail;
  for (int v = fixed; v < cod; ++v) avail.push_back(v);
  std::vector<int> t(dom);
  if (fixed) t[0] = 0;
  for (int i = fixed; i < dom; ++i) {
    const int j = rng.below(static_cast<int>(avail.size()));
    t[i] = avail[j];
    avail.erase(avail.begin() + j);
  }
  return Morphism{d, c, std::move(t)};
}

Morphism sample_regular_epi(Rng& rng, const Instance& inst, int dom, int cod) {
  if (cod > dom) throw std::invalid_argument("no epi with |cod| > |dom|");
  const ObjHandle d = obj(inst, dom), c = obj(inst, cod);
  if (inst.kind == Kind::finvect) {
    for (int tries = 0; tries < 100; ++tries) {
      Morphism m = sample_morphism(rng, inst, dom, cod);
      if (is_regular_epi(m)) return m;
    }
    std::vector<int> e(static_cast<size_t>(dom) * cod, 0);
    for (int i = 0; i < cod; ++i) e[static_cast<size_t>(i) * dom + i] = 1;
    return Morphism{d, c, std::move(e)};
  }
  if (cod == 0) {
    if (dom != 0)
      throw std::invalid_argument("no surjection onto the empty set");
    return Morphism{d, c, {}};
  }
  // transversal first, then fill uniformly
  const int fixed = inst.kind == Kind::pfinset ? 1 : 0;
  std::vector<int> t(dom, -1);
  if (fixed) t[0] = 0;
  std::vector<int> positions;
  for (int x = fixed; x < dom; ++x) positions.push_back(x);
  for (int y = fixed; y < cod; ++y) {
    const int j = rng.below(static_cast<int>(positions.size()));
    t[positions[j]] = y;
    positions.erase(positions.begin() + j);
  }
  for (int x = 0; x < dom; ++x)
    if (t[x] < 0) t[x] = rng.below(cod);
  if (fixed) t[0] = 0;
  return Morphism{d, c, std::move(t)};
}

Morphism sample_iso(Rng& rng, const Instance& inst, int n) {
  const ObjHandle a = obj(inst, n);
  if (inst.kind == Kind::finvect) {
    for (int tries = 0; tries < 100; ++tries) {
      Morphism m = sample_morphism(rng, inst, n, n);
      if (is_iso(m)) return m;
    }
    return identity(a);
  }
  return sample_mono(rng, inst, n, n);
}

namespace {

struct ShapeStream {
  // Runs `exhaust` over all (dom, cod) size pairs <= cap when the projected
  // enumeration bound fits the budget, then `sample` for the sampled part.
  // In exhaustive mode a blown budget is an error; in both mode sampling
  // replaces enumeration.
  template <typename Count, typename Exhaust, typename Sample>
  static void run(const GenParams& params, const Instance& inst, Count count,
                  Exhaust exhaust, Sample sample) {
    const int lo = min_object_size(inst);
    if (params.mode != GenMode::sampled) {
      const int cap = params.mode == GenMode::both
                          ? std::min(params.max_size, both_exhaustive_cap())
                          : params.max_size;
      long total = 0;
      for (int dom = lo; dom <= cap; ++dom)
        for (int cod = lo; cod <= cap; ++cod) {
          total += count(dom, cod);
          if (total < 0) total = LONG_MAX;
        }
      if (total > exhaustive_budget_cases()) {
        if (params.mode == GenMode::exhaustive)
          throw BudgetExceeded("exhaustive enumeration bound " +
                               std::to_string(total) + " exceeds budget");
      } else {
        for (int dom = lo; dom <= cap; ++dom)
          for (int cod = lo; cod <= cap; ++cod) exhaust(dom, cod);
      }
    }
    if (params.mode != GenMode::exhaustive) sample();
  }
};

}  // namespace

void gen_morphism(const GenParams& params, const Instance& inst,
                  const MorphismSink& fn) {
  const std::uint64_t key = rng_derive(params.seed, rng_tag("gen_morphism"));
  const int lo = min_object_size(inst);
  ShapeStream::run(
      params, inst,
      [&](int d, int c) { return hom_count(inst, d, c); },
      [&](int d, int c) { for_each_morphism(inst, d, c, fn); },
      [&] {
        for (int i = 0; i < params.samples; ++i) {
          Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
          const int cod = rng.range(lo, params.max_size);
          const int dom = cod == 0 ? 0 : rng.range(lo, params.max_size);
          fn(sample_morphism(rng, inst, dom, cod));
        }
      });
}

void gen_mono(const GenParams& params, const Instance& inst,
              const MorphismSink& fn) {
  const std::uint64_t key = rng_derive(params.seed, rng_tag("gen_mono"));
  const int lo = min_object_size(inst);
  ShapeStream::run(
      params, inst,
      [&](int d, int c) { return d > c ? 0 : hom_count(inst, d, c); },
      [&](int d, int c) { for_each_mono(inst, d, c, fn); },
      [&] {
        for (int i = 0; i < params.samples; ++i) {
          Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
          const int cod = rng.range(lo, params.max_size);
          const int dom = rng.range(lo, cod);
          fn(sample_mono(rng, inst, dom, cod));
        }
      });
}

void gen_regular_epi(const GenParams& params, const Instance& inst,
                     const MorphismSink& fn) {
  const std::uint64_t key =
      rng_derive(params.seed, rng_tag("gen_regular_epi"));
  const int lo = min_object_size(inst);
  ShapeStream::run(
      params, inst,
      [&](int d, int c) { return c > d ? 0 : hom_count(inst, d, c); },
      [&](int d, int c) { for_each_regular_epi(inst, d, c, fn); },
      [&] {
        for (int i = 0; i < params.samples; ++i) {
          Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
          const int dom = rng.range(lo, params.max_size);
          const int cod = (inst.kind != Kind::finvect && dom > 0)
                              ? rng.range(1, dom)
                              : rng.range(lo, dom);
          fn(sample_regular_epi(rng, inst, dom, cod));
        }
      });
}

void gen_iso(const GenParams& params, const Instance& inst,
             const MorphismSink& fn) {
  const std::uint64_t key = rng_derive(params.seed, rng_tag("gen_iso"));
  const int lo = min_object_size(inst);
  ShapeStream::run(
      params, inst,
      [&](int d, int c) { return d == c ? hom_count(inst, d, c) : 0; },
      [&](int d, int c) {
        if (d == c) for_each_iso(inst, d, fn);
      },
      [&] {
        for (int i = 0; i < params.samples; ++i) {
          Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
          fn(sample_iso(rng, inst, rng.range(lo, params.max_size)));
        }
      });
}

namespace {

Relation relation_from_partition(const Instance& inst, int n,
                                 const std::vector<int>& labels) {
  std::vector<int> firsts, seconds;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (labels[x] == labels[y]) {
        firsts.push_back(x);
        seconds.push_back(y);
      }
  const ObjHandle apex = obj(inst, static_cast<int>(firsts.size()));
  const ObjHandle a = obj(inst, n);
  return Relation{Morphism{apex, a, std::move(firsts)},
                  Morphism{apex, a, std::move(seconds)}};
}

Relation relation_from_subspace(const Instance& inst, int n,
                                const fp::Mat& span_cols) {
  fp::Mat q = fp::quotient_map(span_cols, n, inst.prime);
  const Morphism qm{obj(inst, n), obj(inst, q.rows), q.e};
  return kernel_pair_relation(qm);
}

std::vector<int> canonical_labels(const std::vector<int>& raw) {
  std::vector<int> relabel(raw.size(), -1);
  std::vector<int> out(raw.size());
  int next = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (relabel[raw[i]] < 0) relabel[raw[i]] = next++;
    out[i] = relabel[raw[i]];
  }
  return out;
}

}  // namespace

void for_each_equivalence_relation(const Instance& inst, int on_size,
                                   const RelationSink& fn) {
  if (inst.kind == Kind::finvect) {
    fp::for_each_subspace(on_size, inst.prime, [&](const fp::Mat& rows) {
      fn(relation_from_subspace(inst, on_size, fp::transpose(rows)));
    });
    return;
  }
  if (on_size == 0) {
    fn(relation_from_partition(inst, 0, {}));
    return;
  }
  // restricted growth strings enumerate set partitions exactly once
  std::vector<int> rgs(on_size, 0);
  std::function<void(int, int)> rec = [&](int i, int max_used) {
    if (i == on_size) {
      fn(relation_from_partition(inst, on_size, rgs));
      return;
    }
    for (int v = 0; v <= max_used + 1 && v < on_size; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(max_used, v));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
}

Relation sample_equivalence_relation(Rng& rng, const Instance& inst,
                                     int on_size) {
  if (inst.kind == Kind::finvect) {
    const int k = on_size == 0 ? 0 : rng.below(on_size + 1);
    fp::Mat m = fp::zeros(on_size, k, inst.prime);
    for (int& v : m.e) v = rng.below(inst.prime);
    return relation_from_subspace(inst, on_size, fp::canonical_columns(m));
  }
  std::vector<int> raw(on_size);
  for (int i = 0; i < on_size; ++i) raw[i] = rng.below(std::max(on_size, 1));
  return relation_from_partition(inst, on_size, canonical_labels(raw));
}

void gen_equivalence_relation(const GenParams& params, const Instance& inst,
                              int on_size, const RelationSink& fn) {
  const std::uint64_t key =
      rng_derive(params.seed, rng_tag("gen_equivalence_relation"));
  if (params.mode != GenMode::sampled)
    for_each_equivalence_relation(inst, on_size, fn);
  if (params.mode == GenMode::sampled) {
    for (int i = 0; i < params.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      fn(sample_equivalence_relation(rng, inst, on_size));
    }
  }
}

namespace {

void emit_corelations_for_surjection(const Instance& inst, int q, int a,
                                     const std::vector<int>& table,
                                     const CorelationSink& fn) {
  std::vector<std::vector<int>> fibers(a);
  for (int x = 0; x < q; ++x) fibers[table[x]].push_back(x);
  std::vector<int> doubles;
  for (int y = 0; y < a; ++y) {
    if (fibers[y].empty() || fibers[y].size() > 2) return;
    if (fibers[y].size() == 2) doubles.push_back(y);
  }
  const Morphism e{obj(inst, q), obj(inst, a), table};
  for (int choice = 0; choice < (1 << doubles.size()); ++choice) {
    std::vector<int> t1(a), t2(a);
    int bit = 0;
    for (int y = 0; y < a; ++y) {
      if (fibers[y].size() == 1) {
        t1[y] = t2[y] = fibers[y][0];
      } else {
        const int flip = (choice >> bit++) & 1;
        t1[y] = fibers[y][flip];
        t2[y] = fibers[y][1 - flip];
      }
    }
    if (inst.kind == Kind::pfinset && (t1[0] != 0 || t2[0] != 0)) continue;
    fn(Corelation{Morphism{e.cod, e.dom, std::move(t1)},
                  Morphism{e.cod, e.dom, std::move(t2)}, e});
  }
}

}  // namespace

void for_each_reflexive_corelation(const Instance& inst, int a_max, int q_max,
                                   const CorelationSink& fn) {
  if (inst.kind == Kind::finvect) {
    // e : Q -> A full row rank with every section pair; bounded by budget
    long bound = 0;
    for (int a = 0; a <= a_max; ++a)
      for (int q = a; q <= std::min(q_max, 2 * a); ++q)
        bound += sat_mul(hom_count(inst, q, a),
                         sat_pow(inst.prime, 2L * (q - a) * a));
    if (bound > exhaustive_budget_cases())
      throw BudgetExceeded("exhaustive corelation bound too large");
    for (int a = 0; a <= a_max; ++a)
      for (int q = a; q <= std::min(q_max, 2 * a); ++q)
        for_each_regular_epi(inst, q, a, [&](const Morphism& e) {
          const fp::Mat emat{a, q, inst.prime, e.data};
          auto s0 = fp::solve(emat, fp::identity(a, inst.prime));
          fp::Mat kbasis = fp::nullspace(emat);
          const Instance fi = inst;
          std::vector<fp::Mat> sections;
          for_each_morphism(fi, a, q - a, [&](const Morphism& w) {
            const fp::Mat wm{q - a, a, fi.prime, w.data};
            sections.push_back(fp::add(*s0, fp::mul(kbasis, wm)));
          });
          for (const fp::Mat& m1 : sections)
            for (const fp::Mat& m2 : sections) {
              if (fp::rank(fp::hstack(m1, m2)) != q) continue;
              fn(Corelation{Morphism{e.cod, e.dom, m1.e},
                            Morphism{e.cod, e.dom, m2.e}, e});
            }
        });
    return;
  }
  const int lo = min_object_size(inst);
  for (int a = lo; a <= a_max; ++a)
    for (int q = std::max(a, lo); q <= std::min(q_max, 2 * a); ++q)
      for_each_regular_epi(inst, q, a, [&](const Morphism& e) {
        emit_corelations_for_surjection(inst, q, a, e.data, fn);
      });
}

Corelation sample_reflexive_corelation(Rng& rng, const Instance& inst,
                                       int a_max, int q_max) {
  if (inst.kind == Kind::finvect) {
    for (int tries = 0; tries < 200; ++tries) {
      const int a = rng.range(0, a_max);
      const int q = rng.range(a, std::max(a, std::min(q_max, 2 * a)));
      Morphism e = sample_regular_epi(rng, inst, q, a);
      const fp::Mat emat{a, q, inst.prime, e.data};
      auto s0 = fp::solve(emat, fp::identity(a, inst.prime));
      if (!s0) continue;
      fp::Mat kbasis = fp::nullspace(emat);
      fp::Mat w1 = fp::zeros(q - a, a, inst.prime);
      fp::Mat w2 = fp::zeros(q - a, a, inst.prime);
      for (int& v : w1.e) v = rng.below(inst.prime);
      for (int& v : w2.e) v = rng.below(inst.prime);
      fp::Mat m1 = fp::add(*s0, fp::mul(kbasis, w1));
      fp::Mat m2 = fp::add(*s0, fp::mul(kbasis, w2));
      if (fp::rank(fp::hstack(m1, m2)) != q) continue;
      return Corelation{Morphism{e.cod, e.dom, m1.e},
                        Morphism{e.cod, e.dom, m2.e}, e};
    }
    // fallback: the identity corelation on a_max
    const Morphism id = identity(obj(inst, a_max));
    return Corelation{id, id, id};
  }
  const int lo = min_object_size(inst);
  const int a = rng.range(lo, a_max);
  // pfinset keeps the basepoint fiber single, so at most a-1 doubled fibers
  const int two_cap = inst.kind == Kind::pfinset ? 2 * a - 1 : 2 * a;
  const int hi = std::max(a, std::min(q_max, two_cap));
  const int q = a == 0 ? 0 : rng.range(a, hi);
  // fiber sizes: q - a doubled classes at random positions (pfinset keeps
  // the basepoint fiber single so sections can stay pointed)
  std::vector<int> size(a, 1);
  {
    std::vector<int> slots;
    for (int y = (inst.kind == Kind::pfinset ? 1 : 0); y < a; ++y)
      slots.push_back(y);
    int doubles = q - a;
    while (doubles-- > 0) {
      const int j = rng.below(static_cast<int>(slots.size()));
      size[slots[j]] = 2;
      slots.erase(slots.begin() + j);
    }
  }
  // deal the Q elements to fibers: identity layout for pfinset basepoint,
  // then a random permutation of the rest
  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  const int fixed = inst.kind == Kind::pfinset ? 1 : 0;
  for (int i = fixed; i < q; ++i) {
    const int j = rng.range(i, q - 1);
    std::swap(perm[i], perm[j]);
  }
  std::vector<int> table(q, 0);
  std::vector<int> t1(a), t2(a);
  int cursor = 0;
  for (int y = 0; y < a; ++y) {
    std::vector<int> fiber;
    for (int k = 0; k < size[y]; ++k) fiber.push_back(perm[cursor++]);
    std::sort(fiber.begin(), fiber.end());
    for (int x : fiber) table[x] = y;
    if (fiber.size() == 1) {
      t1[y] = t2[y] = fiber[0];
    } else {
      const int flip = rng.below(2);
      t1[y] = fiber[flip];
      t2[y] = fiber[1 - flip];
    }
  }
  const Morphism e{obj(inst, q), obj(inst, a), std::move(table)};
  return Corelation{Morphism{e.cod, e.dom, std::move(t1)},
                    Morphism{e.cod, e.dom, std::move(t2)}, e};
}

void gen_reflexive_corelation(const GenParams& params, const Instance& inst,
                              const CorelationSink& fn) {
  const std::uint64_t key =
      rng_derive(params.seed, rng_tag("gen_reflexive_corelation"));
  const int q_slack = 2;
  if (params.mode != GenMode::sampled) {
    const int cap = params.mode == GenMode::both
                        ? std::min(params.max_size, both_exhaustive_cap())
                        : params.max_size;
    try {
      for_each_reflexive_corelation(inst, cap, cap + q_slack, fn);
    } catch (const BudgetExceeded&) {
      if (params.mode == GenMode::exhaustive) throw;
      // both mode: sampling below replaces the enumeration
    }
  }
  if (params.mode != GenMode::exhaustive) {
    for (int i = 0; i < params.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      fn(sample_reflexive_corelation(rng, inst, params.max_size,
                                     params.max_size + q_slack));
    }
  }
}

void for_each_proto_scenario(const Instance& inst, int max_size,
                             const ProtoSink& fn) {
  const int lo = min_object_size(inst);
  for (int a = lo; a <= max_size; ++a)
    for (int b = lo; b <= a; ++b)
      for (int ap = lo; ap <= a; ++ap)
        for_each_mono(inst, b, a, [&](const Morphism& alpha) {
          for_each_regular_epi(inst, a, ap, [&](const Morphism& f) {
            if (is_mono(compose(f, alpha))) fn(alpha, f);
          });
        });
}

void gen_proto_scenario(const GenParams& params, const Instance& inst,
                        const ProtoSink& fn) {
  const std::uint64_t key =
      rng_derive(params.seed, rng_tag("gen_proto_scenario"));
  const int lo = min_object_size(inst);
  if (params.mode != GenMode::sampled) {
    const int cap = params.mode == GenMode::both
                        ? std::min(params.max_size, both_exhaustive_cap())
                        : params.max_size;
    long bound = 0;
    for (int a = lo; a <= cap; ++a)
      for (int b = lo; b <= a; ++b)
        for (int ap = lo; ap <= a; ++ap)
          bound += sat_mul(hom_count(inst, b, a), hom_count(inst, a, ap));
    if (bound > exhaustive_budget_cases()) {
      if (params.mode == GenMode::exhaustive)
        throw BudgetExceeded("exhaustive scenario bound too large");
    } else {
      for_each_proto_scenario(inst, cap, fn);
    }
  }
  if (params.mode != GenMode::exhaustive) {
    for (int i = 0; i < params.samples; ++i) {
      Rng rng{rng_derive(key, static_cast<std::uint64_t>(i))};
      bool emitted = false;
      for (int tries = 0; tries < 100 && !emitted; ++tries) {
        const int a = rng.range(lo, params.max_size);
        const int b = rng.range(lo, a);
        const int ap = (inst.kind != Kind::finvect && a > 0)
                           ? rng.range(1, a)
                           : rng.range(lo, a);
        Morphism alpha = sample_mono(rng, inst, b, a);
        Morphism f = sample_regular_epi(rng, inst, a, ap);
        if (is_mono(compose(f, alpha))) {
          fn(alpha, f);
          emitted = true;
        }
      }
      if (!emitted) {
        const int a = rng.range(lo, params.max_size);
        Morphism alpha = sample_mono(rng, inst, lo, a);
        fn(alpha, identity(obj(inst, a)));
      }
    }
  }
}

long bell_number(int n) {
  // Bell triangle
  std::vector<long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<long> next{row.back()};
    for (long v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

long injection_count(int dom, int cod) {
  if (dom > cod) return 0;
  long r = 1;
  for (int i = 0; i < dom; ++i) r *= cod - i;
  return r;
}

long surjection_count(int dom, int cod) {
  if (cod > dom) return 0;
  if (cod == 0) return dom == 0 ? 1 : 0;
  // inclusion-exclusion
  long total = 0;
  long binom = 1;
  for (int k = 0; k <= cod; ++k) {
    const long term = binom * sat_pow(cod - k, dom);
    total += (k % 2 == 0) ? term : -term;
    binom = binom * (cod - k) / (k + 1);
  }
  return total;
}

}  // namespace catcheck

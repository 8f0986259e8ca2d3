#include "catcheck/instances.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "catcheck/linalg.hpp"
#include "catcheck/unionfind.hpp"

namespace catcheck {

namespace {

fp::Mat mat_of(const Morphism& m) {
  return fp::Mat{m.cod.size, m.dom.size, m.inst().prime, m.data};
}

Morphism from_mat(const Instance& inst, const fp::Mat& mat) {
  return Morphism{obj(inst, mat.cols), obj(inst, mat.rows), mat.e};
}

void require_same_instance(const Instance& a, const Instance& b) {
  if (!(a == b)) throw std::invalid_argument("instance mismatch");
}

void require_parallel(const Morphism& f, const Morphism& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw std::invalid_argument("not a parallel pair");
}

}  // namespace

Morphism identity(const ObjHandle& a) {
  if (a.inst.kind == Kind::finvect)
    return from_mat(a.inst, fp::identity(a.size, a.inst.prime));
  std::vector<int> t(a.size);
  std::iota(t.begin(), t.end(), 0);
  return Morphism{a, a, std::move(t)};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require_same_instance(f.inst(), g.inst());
  if (!(f.cod == g.dom)) throw std::invalid_argument("endpoint mismatch");
  if (f.inst().kind == Kind::finvect)
    return from_mat(f.inst(), fp::mul(mat_of(g), mat_of(f)));
  std::vector<int> t(f.dom.size);
  for (int x = 0; x < f.dom.size; ++x) t[x] = g.data[f.data[x]];
  return Morphism{f.dom, g.cod, std::move(t)};
}

ObjHandle initial_obj(const Instance& inst) {
  return obj(inst, inst.kind == Kind::pfinset ? 1 : 0);
}

ObjHandle terminal_obj(const Instance& inst) {
  switch (inst.kind) {
    case Kind::finset: return obj(inst, 1);
    case Kind::finvect: return obj(inst, 0);
    case Kind::pfinset: return obj(inst, 1);
  }
  return obj(inst, 0);
}

Morphism from_initial(const ObjHandle& a) {
  const ObjHandle z = initial_obj(a.inst);
  if (a.inst.kind == Kind::pfinset) return Morphism{z, a, {0}};
  return Morphism{z, a, {}};  // empty table / 0-column matrix
}

Morphism to_terminal(const ObjHandle& a) {
  const ObjHandle t = terminal_obj(a.inst);
  if (a.inst.kind == Kind::finvect) return Morphism{a, t, {}};
  return Morphism{a, t, std::vector<int>(a.size, 0)};
}

Morphism zero_morphism(const ObjHandle& a, const ObjHandle& b) {
  require_same_instance(a.inst, b.inst);
  switch (a.inst.kind) {
    case Kind::finvect:
      return from_mat(a.inst, fp::zeros(b.size, a.size, a.inst.prime));
    case Kind::pfinset:
      return Morphism{a, b, std::vector<int>(a.size, 0)};
    case Kind::finset:
      throw std::invalid_argument("finset has no zero morphisms");
  }
  throw std::invalid_argument("bad instance");
}

ProductResult product(const ObjHandle& a, const ObjHandle& b) {
  require_same_instance(a.inst, b.inst);
  const Instance& inst = a.inst;
  if (inst.kind == Kind::finvect) {
    const int n = a.size, m = b.size;
    fp::Mat p1 = fp::hstack(fp::identity(n, inst.prime),
                            fp::zeros(n, m, inst.prime));
    fp::Mat p2 = fp::hstack(fp::zeros(m, n, inst.prime),
                            fp::identity(m, inst.prime));
    return {obj(inst, n + m), from_mat(inst, p1), from_mat(inst, p2)};
  }
  // Pair (x, y) sits at index x*|B| + y, so the lexicographic order on pairs
  // is the ascending index order and the basepoint pair (0,0) comes first.
  const ObjHandle prod = obj(inst, a.size * b.size);
  std::vector<int> t1(prod.size), t2(prod.size);
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < b.size; ++y) {
      t1[x * b.size + y] = x;
      t2[x * b.size + y] = y;
    }
  return {prod, Morphism{prod, a, std::move(t1)},
          Morphism{prod, b, std::move(t2)}};
}

Morphism pair(const Morphism& f, const Morphism& g) {
  require_same_instance(f.inst(), g.inst());
  if (!(f.dom == g.dom)) throw std::invalid_argument("domain mismatch");
  const ProductResult pr = product(f.cod, g.cod);
  if (f.inst().kind == Kind::finvect)
    return from_mat(f.inst(), fp::vstack(mat_of(f), mat_of(g)));
  std::vector<int> t(f.dom.size);
  for (int x = 0; x < f.dom.size; ++x)
    t[x] = f.data[x] * g.cod.size + g.data[x];
  return Morphism{f.dom, pr.obj, std::move(t)};
}

CoproductResult coproduct(const ObjHandle& a, const ObjHandle& b) {
  require_same_instance(a.inst, b.inst);
  const Instance& inst = a.inst;
  if (inst.kind == Kind::finvect) {
    const int n = a.size, m = b.size;
    fp::Mat i1 = fp::vstack(fp::identity(n, inst.prime),
                            fp::zeros(m, n, inst.prime));
    fp::Mat i2 = fp::vstack(fp::zeros(n, m, inst.prime),
                            fp::identity(m, inst.prime));
    return {obj(inst, n + m), from_mat(inst, i1), from_mat(inst, i2)};
  }
  if (inst.kind == Kind::finset) {
    const ObjHandle sum = obj(inst, a.size + b.size);
    std::vector<int> t1(a.size), t2(b.size);
    std::iota(t1.begin(), t1.end(), 0);
    std::iota(t2.begin(), t2.end(), a.size);
    return {sum, Morphism{a, sum, std::move(t1)},
            Morphism{b, sum, std::move(t2)}};
  }
  // pfinset: wedge, basepoints identified, A-part first.
  const ObjHandle sum = obj(inst, a.size + b.size - 1);
  std::vector<int> t1(a.size), t2(b.size);
  std::iota(t1.begin(), t1.end(), 0);
  t2[0] = 0;
  for (int s = 1; s < b.size; ++s) t2[s] = a.size + s - 1;
  return {sum, Morphism{a, sum, std::move(t1)},
          Morphism{b, sum, std::move(t2)}};
}

Morphism copair(const Morphism& u, const Morphism& v) {
  require_same_instance(u.inst(), v.inst());
  if (!(u.cod == v.cod)) throw std::invalid_argument("codomain mismatch");
  const CoproductResult cp = coproduct(u.dom, v.dom);
  const Instance& inst = u.inst();
  if (inst.kind == Kind::finvect)
    return from_mat(inst, fp::hstack(mat_of(u), mat_of(v)));
  if (inst.kind == Kind::finset) {
    std::vector<int> t = u.data;
    t.insert(t.end(), v.data.begin(), v.data.end());
    return Morphism{cp.obj, u.cod, std::move(t)};
  }
  std::vector<int> t(cp.obj.size);
  for (int x = 0; x < u.dom.size; ++x) t[x] = u.data[x];
  for (int s = 1; s < v.dom.size; ++s) t[u.dom.size + s - 1] = v.data[s];
  return Morphism{cp.obj, u.cod, std::move(t)};
}

Morphism equalizer(const Morphism& f, const Morphism& g) {
  require_parallel(f, g);
  const Instance& inst = f.inst();
  if (inst.kind == Kind::finvect) {
    fp::Mat basis = fp::canonical_columns(fp::nullspace(
        fp::sub(mat_of(f), mat_of(g))));
    return from_mat(inst, basis);
  }
  std::vector<int> t;
  for (int x = 0; x < f.dom.size; ++x)
    if (f.data[x] == g.data[x]) t.push_back(x);
  return Morphism{obj(inst, static_cast<int>(t.size())), f.dom, std::move(t)};
}

Morphism coequalizer(const Morphism& f, const Morphism& g) {
  require_parallel(f, g);
  const Instance& inst = f.inst();
  if (inst.kind == Kind::finvect) {
    fp::Mat diff = fp::sub(mat_of(f), mat_of(g));
    return from_mat(inst, fp::quotient_map(diff, f.cod.size, inst.prime));
  }
  std::vector<std::pair<int, int>> merges;
  merges.reserve(f.dom.size);
  for (int x = 0; x < f.dom.size; ++x)
    merges.emplace_back(f.data[x], g.data[x]);
  QuotientResult q = union_find_quotient(f.cod.size, merges);
  return Morphism{f.cod, obj(inst, q.classes), std::move(q.projection)};
}

FactorPair image_factorization(const Morphism& f) {
  const Instance& inst = f.inst();
  if (inst.kind == Kind::finvect) {
    fp::Mat mono = fp::canonical_columns(mat_of(f));
    auto epi = fp::solve(mono, mat_of(f));
    if (!epi) throw std::logic_error("image factorization failed");
    return {from_mat(inst, *epi), from_mat(inst, mono), f};
  }
  std::vector<int> image;
  std::vector<int> index_of(f.cod.size, -1);
  for (int y = 0; y < f.cod.size; ++y) {
    // ascending scan keeps the image ordered by codomain index
    for (int x = 0; x < f.dom.size; ++x)
      if (f.data[x] == y) {
        index_of[y] = static_cast<int>(image.size());
        image.push_back(y);
        break;
      }
  }
  const ObjHandle mid = obj(inst, static_cast<int>(image.size()));
  std::vector<int> epi(f.dom.size);
  for (int x = 0; x < f.dom.size; ++x) epi[x] = index_of[f.data[x]];
  return {Morphism{f.dom, mid, std::move(epi)},
          Morphism{mid, f.cod, std::move(image)}, f};
}

std::optional<Morphism> factor_through_mono(const Morphism& m,
                                            const Morphism& h) {
  require_same_instance(m.inst(), h.inst());
  if (!(m.cod == h.cod)) throw std::invalid_argument("codomain mismatch");
  if (!is_mono(m)) throw std::invalid_argument("not a monomorphism");
  const Instance& inst = m.inst();
  if (inst.kind == Kind::finvect) {
    auto x = fp::solve(mat_of(m), mat_of(h));
    if (!x) return std::nullopt;
    return from_mat(inst, *x);
  }
  std::vector<int> index_of(m.cod.size, -1);
  for (int i = 0; i < m.dom.size; ++i) index_of[m.data[i]] = i;
  std::vector<int> t(h.dom.size);
  for (int x = 0; x < h.dom.size; ++x) {
    const int i = index_of[h.data[x]];
    if (i < 0) return std::nullopt;
    t[x] = i;
  }
  return Morphism{h.dom, m.dom, std::move(t)};
}

std::optional<Morphism> cofactor_through_regular_epi(const Morphism& e,
                                                     const Morphism& h) {
  require_same_instance(e.inst(), h.inst());
  if (!(e.dom == h.dom)) throw std::invalid_argument("domain mismatch");
  if (!is_regular_epi(e))
    throw std::invalid_argument("not a regular epimorphism");
  const Instance& inst = e.inst();
  Morphism u{e.cod, h.cod, {}};
  if (inst.kind == Kind::finvect) {
    auto section = fp::solve(mat_of(e), fp::identity(e.cod.size, inst.prime));
    if (!section) throw std::logic_error("regular epi has no section");
    u = from_mat(inst, fp::mul(mat_of(h), *section));
  } else {
    std::vector<int> rep(e.cod.size, -1);
    for (int x = 0; x < e.dom.size; ++x)
      if (rep[e.data[x]] < 0) rep[e.data[x]] = x;
    std::vector<int> t(e.cod.size);
    for (int y = 0; y < e.cod.size; ++y) t[y] = h.data[rep[y]];
    u = Morphism{e.cod, h.cod, std::move(t)};
  }
  if (!(compose(u, e) == h)) return std::nullopt;
  return u;
}

bool is_mono(const Morphism& f) {
  const Instance& inst = f.inst();
  if (inst.kind == Kind::finvect) return fp::rank(mat_of(f)) == f.dom.size;
  std::vector<bool> seen(f.cod.size, false);
  for (int v : f.data) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_epi(const Morphism& f) {
  const Instance& inst = f.inst();
  if (inst.kind == Kind::finvect) return fp::rank(mat_of(f)) == f.cod.size;
  std::vector<bool> seen(f.cod.size, false);
  int hit = 0;
  for (int v : f.data)
    if (!seen[v]) {
      seen[v] = true;
      ++hit;
    }
  return hit == f.cod.size;
}

bool is_regular_epi(const Morphism& f) {
  // epi = regular epi in all three shipped instances (surjectivity / full
  // row rank); see instance_card.
  return is_epi(f);
}

bool is_iso(const Morphism& f) {
  return f.dom.size == f.cod.size && is_mono(f);
}

Morphism inverse(const Morphism& f) {
  if (!is_iso(f)) throw std::invalid_argument("not an isomorphism");
  const Instance& inst = f.inst();
  if (inst.kind == Kind::finvect) {
    auto x = fp::solve(mat_of(f), fp::identity(f.cod.size, inst.prime));
    if (!x) throw std::logic_error("inverse failed");
    return from_mat(inst, *x);
  }
  std::vector<int> t(f.cod.size);
  for (int x = 0; x < f.dom.size; ++x) t[f.data[x]] = x;
  return Morphism{f.cod, f.dom, std::move(t)};
}

}  // namespace catcheck

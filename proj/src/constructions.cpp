#include "catcheck/constructions.hpp"

#include <map>

#include "catcheck/linalg.hpp"

namespace catcheck {

bool relation_wellformed(const Relation& rel) {
  return rel.r1.dom == rel.r2.dom && rel.r1.cod == rel.r2.cod &&
         is_jointly_monic(rel.r1, rel.r2);
}

Morphism relation_pairing(const Relation& rel) {
  return pair(rel.r1, rel.r2);
}

bool is_reflexive(const Relation& rel) {
  const Morphism id_a = identity(rel.r1.cod);
  return factor_through_mono(relation_pairing(rel), pair(id_a, id_a))
      .has_value();
}

bool is_symmetric(const Relation& rel) {
  return factor_through_mono(relation_pairing(rel), pair(rel.r2, rel.r1))
      .has_value();
}

bool is_transitive(const Relation& rel) {
  // Composite relation: pairs (r1 u, r2 v) over the pullback r2 u = r1 v,
  // contained in the relation iff its image factors through <r1,r2>.
  const PullbackResult pb = pullback(rel.r2, rel.r1);
  const Morphism composite =
      pair(compose(rel.r1, pb.proj1), compose(rel.r2, pb.proj2));
  const Morphism img = image_factorization(composite).mono;
  return factor_through_mono(relation_pairing(rel), img).has_value();
}

bool is_equivalence_relation(const Relation& rel) {
  return relation_wellformed(rel) && is_reflexive(rel) && is_symmetric(rel) &&
         is_transitive(rel);
}

Relation kernel_pair_relation(const Morphism& f) {
  const PullbackResult kp = kernel_pair(f);
  return Relation{kp.proj1, kp.proj2};
}

Morphism canonical_subobject(const Morphism& mono) {
  if (!is_mono(mono)) throw std::invalid_argument("not a monomorphism");
  return image_factorization(mono).mono;
}

bool image_equal(const Morphism& s, const Morphism& t) {
  if (!(s.cod == t.cod)) return false;
  return canonical_subobject(s) == canonical_subobject(t);
}

Morphism subobject_join(const Morphism& s, const Morphism& t) {
  if (!(s.cod == t.cod)) throw std::invalid_argument("codomain mismatch");
  if (!is_mono(s) || !is_mono(t))
    throw std::invalid_argument("join of non-monomorphisms");
  return image_factorization(copair(s, t)).mono;
}

Morphism subobject_meet(const Morphism& s, const Morphism& t) {
  if (!(s.cod == t.cod)) throw std::invalid_argument("codomain mismatch");
  if (!is_mono(s) || !is_mono(t))
    throw std::invalid_argument("meet of non-monomorphisms");
  const PullbackResult pb = pullback(s, t);
  return canonical_subobject(compose(s, pb.proj1));
}

Morphism subobject_pullback(const Morphism& f, const Morphism& u) {
  if (!(f.cod == u.cod)) throw std::invalid_argument("codomain mismatch");
  if (!is_mono(u)) throw std::invalid_argument("not a monomorphism");
  const PullbackResult pb = pullback(f, u);
  return canonical_subobject(pb.proj1);
}

ReflexiveClosureResult reflexive_closure(const Morphism& m,
                                         const Relation& rel) {
  if (!is_mono(m)) throw std::invalid_argument("m is not a monomorphism");
  if (!(rel.r1.cod == m.dom))
    throw std::invalid_argument("relation is not on dom(m)");
  if (!is_equivalence_relation(rel))
    throw std::invalid_argument("relation is not an equivalence relation");
  const ObjHandle a = m.cod;
  const Morphism id_a = identity(a);
  const Morphism big =
      copair(pair(compose(m, rel.r1), compose(m, rel.r2)), pair(id_a, id_a));
  const FactorPair fp = image_factorization(big);
  const ProductResult pr = product(a, a);
  return {Relation{compose(pr.proj1, fp.mono), compose(pr.proj2, fp.mono)},
          fp.epi};
}

namespace {

// Completes a commuting square to a PushoutResult: the native oracle
// pushout of the span (left, top) plus the induced comparison onto the
// square's cocone.
PushoutResult finish_pushout(Square sq) {
  if (!square_commutes(sq))
    throw std::logic_error("constructed pushout square does not commute");
  NativePushout np = native_pushout(sq.left, sq.top);
  auto cmp =
      cofactor_through_regular_epi(np.quotient, copair(sq.bottom, sq.right));
  if (!cmp) throw std::logic_error("cocone does not factor through pushout");
  return {std::move(sq), std::move(np.quotient), std::move(*cmp)};
}

}  // namespace

PushoutResult pushout_mono_along_regular_epi(const Morphism& m,
                                             const Morphism& e) {
  if (!(m.dom == e.dom)) throw std::invalid_argument("span domain mismatch");
  if (!is_mono(m)) throw std::invalid_argument("m is not a monomorphism");
  if (!is_regular_epi(e))
    throw std::invalid_argument("e is not a regular epimorphism");
  const Relation kp = kernel_pair_relation(e);
  const ReflexiveClosureResult rc = reflexive_closure(m, kp);
  const Morphism p = coequalizer(rc.closure.r1, rc.closure.r2);
  auto n = cofactor_through_regular_epi(e, compose(p, m));
  if (!n) throw std::logic_error("pushout leg failed to factor");
  return finish_pushout(Square{e, m, *n, p});
}

PushoutResult pushout_mono_along_coproduct_inclusion(const Morphism& n,
                                                     const ObjHandle& a) {
  if (!is_mono(n)) throw std::invalid_argument("n is not a monomorphism");
  const CoproductResult top_cp = coproduct(a, n.dom);
  const CoproductResult bot_cp = coproduct(a, n.cod);
  return finish_pushout(Square{top_cp.inj2, n,
                               morphism_coproduct(identity(a), n),
                               bot_cp.inj2});
}

PushoutResult pushout_mono_general(const Morphism& m, const Morphism& f) {
  if (!(m.dom == f.dom)) throw std::invalid_argument("span domain mismatch");
  if (!is_mono(m)) throw std::invalid_argument("m is not a monomorphism");
  // f factors as [f,1] inj1 through S + B; push along the inclusion, then
  // along the split (hence regular) epi [f,1].
  const ObjHandle b = f.cod;
  const CoproductResult cp_sb = coproduct(m.dom, b);
  const CoproductResult cp_ab = coproduct(m.cod, b);
  const Square sq1{cp_sb.inj1, m, morphism_coproduct(m, identity(b)),
                   cp_ab.inj1};
  const Morphism e2 = copair(f, identity(b));
  const PushoutResult po2 = pushout_mono_along_regular_epi(sq1.right, e2);
  return finish_pushout(paste_horizontal(sq1, po2.square));
}

bool corelation_wellformed(const Corelation& c) {
  if (!(c.q1.dom == c.q2.dom) || !(c.q1.cod == c.q2.cod)) return false;
  if (!(c.retraction.dom == c.q1.cod) || !(c.retraction.cod == c.q1.dom))
    return false;
  const Morphism id_a = identity(c.q1.dom);
  return compose(c.retraction, c.q1) == id_a &&
         compose(c.retraction, c.q2) == id_a && is_epi(copair(c.q1, c.q2));
}

Corelation cokernel_pair(const Morphism& f) {
  const FactorPair fp = image_factorization(f);
  const PushoutResult po = pushout_mono_general(fp.mono, fp.mono);
  const Morphism q1 = po.square.bottom;
  const Morphism q2 = po.square.right;
  const Morphism joint = copair(q1, q2);
  if (!is_regular_epi(joint))
    throw std::logic_error("cokernel pair legs not jointly epic");
  const Morphism id_b = identity(f.cod);
  auto e = cofactor_through_regular_epi(joint, copair(id_b, id_b));
  if (!e) throw std::logic_error("codiagonal retraction failed to factor");
  return {q1, q2, *e};
}

bool corelation_is_coeffective(const Corelation& c) {
  if (!corelation_wellformed(c))
    throw std::invalid_argument("corelation invariants violated");
  const Morphism m = equalizer(c.q1, c.q2);
  const PushoutResult po = pushout_mono_general(m, m);
  const Morphism joint = copair(po.square.bottom, po.square.right);
  if (!is_regular_epi(joint))
    throw std::logic_error("pushout legs not jointly epic");
  auto w = cofactor_through_regular_epi(joint, copair(c.q1, c.q2));
  if (!w) throw std::logic_error("corelation does not factor through pushout");
  return is_iso(*w);
}

CoprotoVerdict evaluate_coprotomodularity_case(const Morphism& alpha,
                                               const Morphism& f) {
  if (!is_mono(alpha)) throw std::invalid_argument("alpha not mono");
  if (!is_epi(f)) throw std::invalid_argument("f not epi");
  if (!(f.dom == alpha.cod)) throw std::invalid_argument("endpoint mismatch");
  const Morphism alpha_prime = compose(f, alpha);
  if (!is_mono(alpha_prime))
    throw std::invalid_argument("f alpha not mono: outside the hypotheses");
  const Morphism t_b = to_terminal(alpha.dom);
  const PushoutResult po1 = pushout_mono_general(alpha, t_b);
  const PushoutResult po2 = pushout_mono_general(alpha_prime, t_b);
  const Morphism j = po1.square.bottom;     // A -> C
  const Morphism sigma = po1.square.right;  // 1 -> C
  const Morphism jp = po2.square.bottom;    // A' -> C'
  const Morphism sigmap = po2.square.right;
  const Morphism joint = copair(j, sigma);
  if (!is_regular_epi(joint))
    throw std::logic_error("pushout cocone not jointly epic");
  auto h = cofactor_through_regular_epi(joint, copair(compose(jp, f), sigmap));
  if (!h) throw std::logic_error("induced morphism failed to factor");
  return {is_iso(*h), is_iso(f)};
}

SubobjectLattice subobject_lattice(const ObjHandle& a, int guard) {
  const Instance& inst = a.inst;
  if (guard == 0) guard = inst.kind == Kind::finvect ? 4 : 6;
  if (a.size > guard)
    throw std::invalid_argument("subobject lattice size guard exceeded");

  SubobjectLattice out;
  if (inst.kind == Kind::finvect) {
    fp::for_each_subspace(a.size, inst.prime, [&](const fp::Mat& rows) {
      fp::Mat cols = fp::transpose(rows);
      out.subs.push_back(
          Morphism{obj(inst, cols.cols), a, cols.e});
    });
  } else {
    const int n = a.size;
    const int fixed = inst.kind == Kind::pfinset ? 1 : 0;
    for (int mask = 0; mask < (1 << (n - fixed)); ++mask) {
      std::vector<int> elems;
      if (fixed) elems.push_back(0);
      for (int i = 0; i < n - fixed; ++i)
        if (mask & (1 << i)) elems.push_back(i + fixed);
      out.subs.push_back(
          Morphism{obj(inst, static_cast<int>(elems.size())), a,
                   std::move(elems)});
    }
  }

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < out.subs.size(); ++i)
    index[out.subs[i].data] = static_cast<int>(i);
  const int k = static_cast<int>(out.subs.size());
  out.meet.assign(k, std::vector<int>(k, -1));
  out.join.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      out.meet[i][j] = index.at(subobject_meet(out.subs[i], out.subs[j]).data);
      out.join[i][j] = index.at(subobject_join(out.subs[i], out.subs[j]).data);
    }
  return out;
}

}  // namespace catcheck

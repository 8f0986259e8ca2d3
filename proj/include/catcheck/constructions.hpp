#pragma once

#include "catcheck/kernel.hpp"

namespace catcheck {

// A span (R, r1, r2) into a common object with jointly monic legs.  The
// reflexive/symmetric/transitive flags are always computed, never trusted.
struct Relation {
  Morphism r1, r2;
  friend bool operator==(const Relation&, const Relation&) = default;
};

bool relation_wellformed(const Relation& rel);
Morphism relation_pairing(const Relation& rel);  // <r1,r2> : R -> A x A
bool is_reflexive(const Relation& rel);
bool is_symmetric(const Relation& rel);
bool is_transitive(const Relation& rel);
bool is_equivalence_relation(const Relation& rel);
Relation kernel_pair_relation(const Morphism& f);

// Subobjects are identified up to image equality, decided by comparing
// canonical image representatives.
Morphism canonical_subobject(const Morphism& mono);
bool image_equal(const Morphism& s, const Morphism& t);
// The mono part of the (regular epi, mono) factorization of [s,t].
Morphism subobject_join(const Morphism& s, const Morphism& t);
Morphism subobject_meet(const Morphism& s, const Morphism& t);
// Pullback of the subobject u of B along f : A -> B, as a canonical
// subobject of A.
Morphism subobject_pullback(const Morphism& f, const Morphism& u);

struct ReflexiveClosureResult {
  Relation closure;  // (Rbar, rbar1, rbar2) on A
  Morphism cover;    // the regular epi e : R + A -> Rbar
};

// Factorizes [<m r1, m r2>, <1,1>] : R + A -> A x A and reads the closure
// off the mono part.  Pre: m mono, rel an equivalence relation on dom m.
ReflexiveClosureResult reflexive_closure(const Morphism& m, const Relation& rel);

struct PushoutResult {
  // top/left are the pushed span, right/bottom the cocone; the mono sits on
  // the left and its pushforward on the right.
  Square square;
  // Mediator context: the native oracle quotient and the induced comparison
  // from the oracle pushout object onto cod(bottom); the square is a pushout
  // iff the comparison is an isomorphism.
  Morphism quotient;
  Morphism comparison;
};

PushoutResult pushout_mono_along_regular_epi(const Morphism& m,
                                             const Morphism& e);
PushoutResult pushout_mono_along_coproduct_inclusion(const Morphism& n,
                                                     const ObjHandle& a);
PushoutResult pushout_mono_general(const Morphism& m, const Morphism& f);

// A cospan q1, q2 : A -> Q with [q1,q2] epi and a common retraction
// e : Q -> A.
struct Corelation {
  Morphism q1, q2;
  Morphism retraction;
  friend bool operator==(const Corelation&, const Corelation&) = default;
};

bool corelation_wellformed(const Corelation& c);
// Pushout of the regular image of f along itself, with the codiagonal
// retraction.
Corelation cokernel_pair(const Morphism& f);
// Equalize the legs, push the equalizer out along itself, and test whether
// the induced comparison onto (Q, q1, q2) is an isomorphism.  Throws on
// Corelation invariant violations instead of returning false.
bool corelation_is_coeffective(const Corelation& c);

struct CoprotoVerdict {
  bool h_is_iso = false;
  bool f_is_iso = false;
};

// Builds C and C' as pushouts of alpha and f alpha along B -> 1 and reports
// whether the induced h : C -> C' and f are isomorphisms.  Pre: alpha mono,
// f epi, f alpha mono.
CoprotoVerdict evaluate_coprotomodularity_case(const Morphism& alpha,
                                               const Morphism& f);

struct SubobjectLattice {
  std::vector<Morphism> subs;          // canonical representatives
  std::vector<std::vector<int>> meet;  // indices into subs
  std::vector<std::vector<int>> join;
};

// Complete subobject lattice of a small object.  guard 0 selects the
// defaults (6 elements / dimension 4); beyond the guard the call throws.
SubobjectLattice subobject_lattice(const ObjHandle& a, int guard = 0);

}  // namespace catcheck

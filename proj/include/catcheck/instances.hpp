#pragma once

#include <optional>

#include "catcheck/morphism.hpp"

namespace catcheck {

// The computable-category contract.  Every instance provides these
// primitives with canonical, bit-stable results:
//
//   finset   — total function tables; initial 0, terminal 1.
//   finvect  — matrices over F_p; zero object of dimension 0.
//   pfinset  — basepoint-preserving tables, basepoint fixed at index 0;
//              zero object of size 1; coproduct is the wedge.
//
// In all three, epi coincides with regular epi (surjectivity / full row
// rank); this is an instance-level fact recorded in instance_card, not
// assumed by the calculus built on top.

Morphism identity(const ObjHandle& a);
Morphism compose(const Morphism& g, const Morphism& f);

ObjHandle initial_obj(const Instance& inst);
ObjHandle terminal_obj(const Instance& inst);
Morphism from_initial(const ObjHandle& a);
Morphism to_terminal(const ObjHandle& a);
// Pointed instances only (finvect, pfinset).
Morphism zero_morphism(const ObjHandle& a, const ObjHandle& b);

struct ProductResult {
  ObjHandle obj;
  Morphism proj1, proj2;
};
ProductResult product(const ObjHandle& a, const ObjHandle& b);
// <f,g> : dom f -> A x B, unique with proj1<f,g> = f, proj2<f,g> = g.
Morphism pair(const Morphism& f, const Morphism& g);

struct CoproductResult {
  ObjHandle obj;
  Morphism inj1, inj2;
};
CoproductResult coproduct(const ObjHandle& a, const ObjHandle& b);
// [u,v] : A + B -> cod u, unique with [u,v]inj1 = u, [u,v]inj2 = v.
Morphism copair(const Morphism& u, const Morphism& v);

// Canonical mono into the common domain: ascending element subset
// (finset/pfinset) or canonical nullspace basis of f - g (finvect).
Morphism equalizer(const Morphism& f, const Morphism& g);

// Canonical regular epi from the common codomain: union-find quotient with
// classes numbered by ascending minimal representative (finset/pfinset), or
// the canonical cokernel projection of f - g (finvect).
Morphism coequalizer(const Morphism& f, const Morphism& g);

struct FactorPair {
  Morphism epi;   // regular epi onto the image
  Morphism mono;  // canonical image inclusion
  Morphism original;
};
// (regular epi, mono) factorization; image ordered by ascending codomain
// index (finset/pfinset) or given by the canonical column-space basis
// (finvect).  Deterministic: re-running is bit-identical.
FactorPair image_factorization(const Morphism& f);

// The unique u with m u = h, when h factors through the mono m.
std::optional<Morphism> factor_through_mono(const Morphism& m,
                                            const Morphism& h);
// The unique u with u e = h, when h coequalizes the kernel pair of the
// regular epi e.
std::optional<Morphism> cofactor_through_regular_epi(const Morphism& e,
                                                     const Morphism& h);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_regular_epi(const Morphism& f);
bool is_iso(const Morphism& f);
Morphism inverse(const Morphism& f);  // pre: is_iso

}  // namespace catcheck

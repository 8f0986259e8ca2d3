#pragma once

#include "catcheck/instances.hpp"

namespace catcheck {

// Instance-agnostic diagram calculus, built only on the contract in
// instances.hpp.

// A commutative square candidate with oriented roles:
//
//     dom(top) --top--> cod(top)
//        |left              |right
//        v                  v
//     dom(bottom) -bottom-> cod(bottom)
//
// Commutativity (right.top == bottom.left) is a checkable predicate, never
// assumed; non-commuting squares are legal values and the predicates below
// simply return false on them.
struct Square {
  Morphism top, left, right, bottom;
  friend bool operator==(const Square&, const Square&) = default;
};

bool square_endpoints_ok(const Square& sq);
bool square_commutes(const Square& sq);

struct PullbackResult {
  ObjHandle apex;
  Morphism proj1, proj2;
};

// Canonical pullback of the cospan f : A -> X, g : B -> X, computed as the
// equalizer of f proj1 and g proj2 on A x B.  This reproduces, per instance:
// the lexicographically ordered pair subset {(a,b) | f(a) = g(b)}
// (finset/pfinset, basepoint pair first), and the canonical nullspace basis
// of the block map [f, -g] (finvect).
PullbackResult pullback(const Morphism& f, const Morphism& g);
PullbackResult kernel_pair(const Morphism& f);

// The canonical pullback cone as a square: top proj2, left proj1, right g,
// bottom f.
Square pullback_square(const Morphism& f, const Morphism& g);

// The unique u into pullback(sq.bottom, sq.right) with proj1 u = sq.left and
// proj2 u = sq.top.  Throws std::invalid_argument when sq does not commute.
Morphism comparison_into_pullback(const Square& sq);

// Decided by comparison against the canonical pullback, which satisfies the
// universal property by construction.
bool is_pullback(const Square& sq);
// Comparison is a regular epimorphism.
bool is_feeble_pullback(const Square& sq);

// f + g : A + C -> B + D.
Morphism morphism_coproduct(const Morphism& f, const Morphism& g);
// Corner-wise coproduct of squares.
Square coproduct_of_squares(const Square& a, const Square& b);
// Horizontal pasting; pre: sq2.left == sq1.right.
Square paste_horizontal(const Square& sq1, const Square& sq2);

// The pairing <f,g> into the product is mono.
bool is_jointly_monic(const Morphism& f, const Morphism& g);

// [1,1] : A + A -> A.
Morphism fold(const ObjHandle& a);

struct NativePushout {
  ObjHandle obj;
  Morphism quotient;  // A + B -> Q, the coequalizer of inj1 f and inj2 g
  Morphism in1, in2;
};

// The instance's native pushout of the span f : S -> A, g : S -> B, used as
// the oracle the derived pushout constructions are verified against.
NativePushout native_pushout(const Morphism& f, const Morphism& g);

}  // namespace catcheck

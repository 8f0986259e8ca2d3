#include "catcheck/kernel.hpp"

namespace catcheck {

bool square_endpoints_ok(const Square& sq) {
  return sq.top.inst() == sq.left.inst() &&
         sq.top.inst() == sq.right.inst() &&
         sq.top.inst() == sq.bottom.inst() &&
         sq.top.dom == sq.left.dom && sq.top.cod == sq.right.dom &&
         sq.left.cod == sq.bottom.dom && sq.right.cod == sq.bottom.cod;
}

bool square_commutes(const Square& sq) {
  return square_endpoints_ok(sq) &&
         compose(sq.right, sq.top) == compose(sq.bottom, sq.left);
}

PullbackResult pullback(const Morphism& f, const Morphism& g) {
  if (!(f.cod == g.cod)) throw std::invalid_argument("codomain mismatch");
  const ProductResult pr = product(f.dom, g.dom);
  const Morphism eq = equalizer(compose(f, pr.proj1), compose(g, pr.proj2));
  return {eq.dom, compose(pr.proj1, eq), compose(pr.proj2, eq)};
}

PullbackResult kernel_pair(const Morphism& f) { return pullback(f, f); }

Square pullback_square(const Morphism& f, const Morphism& g) {
  const PullbackResult pb = pullback(f, g);
  return Square{pb.proj2, pb.proj1, g, f};
}

Morphism comparison_into_pullback(const Square& sq) {
  if (!square_commutes(sq))
    throw std::invalid_argument("square does not commute");
  const PullbackResult pb = pullback(sq.bottom, sq.right);
  const Morphism embedding = pair(pb.proj1, pb.proj2);
  auto u = factor_through_mono(embedding, pair(sq.left, sq.top));
  if (!u)
    throw std::logic_error("commuting cone failed to factor through pullback");
  return *u;
}

bool is_pullback(const Square& sq) {
  return square_commutes(sq) && is_iso(comparison_into_pullback(sq));
}

bool is_feeble_pullback(const Square& sq) {
  return square_commutes(sq) && is_regular_epi(comparison_into_pullback(sq));
}

Morphism morphism_coproduct(const Morphism& f, const Morphism& g) {
  const CoproductResult cp = coproduct(f.cod, g.cod);
  return copair(compose(cp.inj1, f), compose(cp.inj2, g));
}

Square coproduct_of_squares(const Square& a, const Square& b) {
  if (!(a.top.inst() == b.top.inst()))
    throw std::invalid_argument("instance mismatch");
  return Square{morphism_coproduct(a.top, b.top),
                morphism_coproduct(a.left, b.left),
                morphism_coproduct(a.right, b.right),
                morphism_coproduct(a.bottom, b.bottom)};
}

Square paste_horizontal(const Square& sq1, const Square& sq2) {
  if (!(sq2.left == sq1.right))
    throw std::invalid_argument("squares are not composable");
  return Square{compose(sq2.top, sq1.top), sq1.left, sq2.right,
                compose(sq2.bottom, sq1.bottom)};
}

bool is_jointly_monic(const Morphism& f, const Morphism& g) {
  if (!(f.dom == g.dom)) throw std::invalid_argument("domain mismatch");
  return is_mono(pair(f, g));
}

Morphism fold(const ObjHandle& a) {
  return copair(identity(a), identity(a));
}

NativePushout native_pushout(const Morphism& f, const Morphism& g) {
  if (!(f.dom == g.dom)) throw std::invalid_argument("span domain mismatch");
  const CoproductResult cp = coproduct(f.cod, g.cod);
  Morphism q = coequalizer(compose(cp.inj1, f), compose(cp.inj2, g));
  Morphism in1 = compose(q, cp.inj1);
  Morphism in2 = compose(q, cp.inj2);
  return {q.cod, std::move(q), std::move(in1), std::move(in2)};
}

}  // namespace catcheck

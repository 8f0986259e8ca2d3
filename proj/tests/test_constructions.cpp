#include "doctest.h"

#include "catcheck/constructions.hpp"
#include "catcheck/generators.hpp"

using namespace catcheck;

namespace {

Morphism fs(int dom, int cod, std::vector<int> t) {
  return make_morphism(finset(), dom, cod, std::move(t));
}
Morphism fv(int p, int dom, int cod, std::vector<int> e) {
  return make_morphism(finvect(p), dom, cod, std::move(e));
}

Relation full_relation(const Instance& inst, int n) {
  std::vector<int> labels(n, 0);
  std::vector<int> firsts, seconds;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      firsts.push_back(x);
      seconds.push_back(y);
    }
  const ObjHandle apex = obj(inst, n * n);
  const ObjHandle a = obj(inst, n);
  return Relation{Morphism{apex, a, firsts}, Morphism{apex, a, seconds}};
}

Relation diagonal_relation(const Instance& inst, int n) {
  return kernel_pair_relation(identity(obj(inst, n)));
}

void check_pushout_result(const PushoutResult& po) {
  CHECK(square_commutes(po.square));
  CHECK(is_iso(po.comparison));       // equals the native oracle pushout
  CHECK(is_pullback(po.square));
  CHECK(is_mono(po.square.right));    // monos are pushout stable
}

}  // namespace

TEST_CASE("relation predicates on hand-built relations") {
  const Relation full = full_relation(finset(), 2);
  CHECK(relation_wellformed(full));
  CHECK(is_reflexive(full));
  CHECK(is_symmetric(full));
  CHECK(is_transitive(full));
  CHECK(is_equivalence_relation(full));

  // {(0,1)} alone: neither reflexive nor symmetric nor transitive-closed
  // as an equivalence, but transitive as a bare relation
  const Relation arrow{fs(1, 2, {0}), fs(1, 2, {1})};
  CHECK_FALSE(is_reflexive(arrow));
  CHECK_FALSE(is_symmetric(arrow));
  CHECK(is_transitive(arrow));

  // {(0,1),(1,0)}: symmetric, not reflexive, not transitive
  const Relation swap{fs(2, 2, {0, 1}), fs(2, 2, {1, 0})};
  CHECK(is_symmetric(swap));
  CHECK_FALSE(is_reflexive(swap));
  CHECK_FALSE(is_transitive(swap));
}

TEST_CASE("subobject_join: image union") {
  CHECK(subobject_join(fs(1, 3, {0}), fs(1, 3, {1})) == fs(2, 3, {0, 1}));
}

TEST_CASE("subobject_join is idempotent up to image equality") {
  const Morphism s = fs(2, 4, {3, 1});
  CHECK(image_equal(subobject_join(s, s), s));
}

TEST_CASE("subobject_join: two lines spanning the plane over F2") {
  const Morphism j =
      subobject_join(fv(2, 1, 2, {1, 0}), fv(2, 1, 2, {0, 1}));
  CHECK(is_iso(j));
}

TEST_CASE("subobject_join rejects non-monos and mismatched codomains") {
  CHECK_THROWS_AS(subobject_join(fs(2, 1, {0, 0}), fs(1, 1, {0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(subobject_join(fs(1, 3, {0}), fs(1, 2, {0})),
                  std::invalid_argument);
}

TEST_CASE("reflexive_closure: point into 2 gives the diagonal") {
  const auto rc =
      reflexive_closure(fs(1, 2, {0}), diagonal_relation(finset(), 1));
  CHECK(rc.closure.r1 == fs(2, 2, {0, 1}));
  CHECK(rc.closure.r2 == fs(2, 2, {0, 1}));
  CHECK(is_equivalence_relation(rc.closure));
}

TEST_CASE("reflexive_closure: already-reflexive input is unchanged") {
  const Relation full = full_relation(finset(), 2);
  const auto rc = reflexive_closure(identity(obj(finset(), 2)), full);
  CHECK(image_equal(relation_pairing(rc.closure), relation_pairing(full)));
}

TEST_CASE("reflexive_closure: full relation on an embedded pair plus the "
          "diagonal") {
  const auto rc =
      reflexive_closure(fs(2, 3, {0, 1}), full_relation(finset(), 2));
  // pairs {(0,0),(0,1),(1,0),(1,1),(2,2)} in lexicographic order
  CHECK(rc.closure.r1 == fs(5, 3, {0, 0, 1, 1, 2}));
  CHECK(rc.closure.r2 == fs(5, 3, {0, 1, 0, 1, 2}));
  CHECK(is_equivalence_relation(rc.closure));
  // the cover glues the copaired map onto the closure
  CHECK(compose(relation_pairing(rc.closure), rc.cover) ==
        copair(pair(compose(fs(2, 3, {0, 1}), full_relation(finset(), 2).r1),
                    compose(fs(2, 3, {0, 1}), full_relation(finset(), 2).r2)),
               pair(identity(obj(finset(), 3)),
                    identity(obj(finset(), 3)))));
}

TEST_CASE("reflexive_closure validates its preconditions") {
  CHECK_THROWS_AS(
      reflexive_closure(fs(2, 2, {0, 0}), diagonal_relation(finset(), 2)),
      std::invalid_argument);
  const Relation not_equiv{fs(1, 2, {0}), fs(1, 2, {1})};
  CHECK_THROWS_AS(reflexive_closure(fs(2, 3, {0, 1}), not_equiv),
                  std::invalid_argument);
}

TEST_CASE("pushout along a regular epi: identity epi is the identity "
          "pushout") {
  const Morphism m = fs(1, 2, {0});
  const auto po =
      pushout_mono_along_regular_epi(m, identity(obj(finset(), 1)));
  CHECK(po.square.bottom == identity(obj(finset(), 2)));
  CHECK(po.square.right == m);
  check_pushout_result(po);
}

TEST_CASE("pushout along a regular epi: worked case") {
  const auto po =
      pushout_mono_along_regular_epi(fs(2, 3, {0, 1}), fs(2, 1, {0, 0}));
  CHECK(po.square.bottom == fs(3, 2, {0, 0, 1}));
  CHECK(po.square.right == fs(1, 2, {0}));
  check_pushout_result(po);
}

TEST_CASE("pushout along a regular epi: finvect identity case") {
  const Morphism m = fv(2, 1, 2, {1, 0});
  const auto po =
      pushout_mono_along_regular_epi(m, identity(obj(finvect(2), 1)));
  CHECK(po.square.right == m);
  CHECK(is_iso(po.square.bottom));
  check_pushout_result(po);
}

TEST_CASE("pushout along a coproduct inclusion: empty summand degenerates") {
  const Morphism n = fs(1, 2, {0});
  const auto po =
      pushout_mono_along_coproduct_inclusion(n, obj(finset(), 0));
  CHECK(po.square.right == n);
  check_pushout_result(po);
}

TEST_CASE("pushout along a coproduct inclusion: disjoint-union layout") {
  const auto po =
      pushout_mono_along_coproduct_inclusion(fs(1, 2, {0}), obj(finset(), 1));
  CHECK(po.square.right == fs(2, 3, {0, 1}));
  check_pushout_result(po);
}

TEST_CASE("pushout along a coproduct inclusion: pfinset wedge version") {
  const Morphism n = make_morphism(pfinset(), 2, 3, {0, 2});
  const auto po = pushout_mono_along_coproduct_inclusion(n, obj(pfinset(), 2));
  check_pushout_result(po);
}

TEST_CASE("pushout of a mono along an arbitrary morphism") {
  SUBCASE("iso transport") {
    const Morphism m = fs(2, 3, {2, 0});
    const Morphism f = fs(2, 2, {1, 0});
    const auto po = pushout_mono_general(m, f);
    CHECK(is_iso(po.square.bottom));
    check_pushout_result(po);
  }
  SUBCASE("pushout of a point inclusion") {
    const auto po = pushout_mono_general(fs(1, 2, {0}), fs(1, 1, {0}));
    CHECK(po.square.right.cod.size == 2);
    check_pushout_result(po);
  }
  SUBCASE("pushout of an identity is an identity square up to iso") {
    const Morphism id3 = identity(obj(finset(), 3));
    const auto po = pushout_mono_general(id3, fs(3, 2, {0, 1, 1}));
    CHECK(is_iso(po.square.right));
    check_pushout_result(po);
  }
}

TEST_CASE("cokernel_pair: quotient of 2+2 identifying the images") {
  const Corelation c = cokernel_pair(fs(1, 2, {0}));
  CHECK(c.q1 == fs(2, 3, {0, 1}));
  CHECK(c.q2 == fs(2, 3, {0, 2}));
  CHECK(c.retraction == fs(3, 2, {0, 1, 1}));
  CHECK(corelation_wellformed(c));
}

TEST_CASE("cokernel_pair of an identity is discrete") {
  const Corelation c = cokernel_pair(identity(obj(finset(), 3)));
  CHECK(c.q1 == identity(obj(finset(), 3)));
  CHECK(c.q2 == identity(obj(finset(), 3)));
}

TEST_CASE("cokernel_pair of the zero map over F2 is the block cospan") {
  const Corelation c = cokernel_pair(fv(2, 1, 1, {0}));
  CHECK(c.q1.cod.size == 2);
  CHECK(corelation_wellformed(c));
}

TEST_CASE("corelation_is_coeffective holds for cokernel pairs") {
  CHECK(corelation_is_coeffective(cokernel_pair(fs(1, 2, {0}))));
  CHECK(corelation_is_coeffective(cokernel_pair(fs(3, 2, {0, 1, 0}))));
  const Morphism id2 = identity(obj(finset(), 2));
  CHECK(corelation_is_coeffective(Corelation{id2, id2, id2}));
}

TEST_CASE("corelation_is_coeffective reports invariant violations as "
          "errors") {
  // q1 = q2 with a fake retraction whose composites are not the identity
  const Morphism q = fs(2, 2, {0, 0});
  CHECK_THROWS_AS(corelation_is_coeffective(Corelation{q, q, q}),
                  std::invalid_argument);
}

TEST_CASE("cokernel pairs are co-effective in every instance, small sweep") {
  for (const Instance inst : {finset(), finvect(2), pfinset()}) {
    const int lo = min_object_size(inst);
    for (int a = lo; a <= 2; ++a)
      for (int b = std::max(lo, 1); b <= 2; ++b)
        for_each_morphism(inst, a, b, [&](const Morphism& f) {
          CHECK(corelation_is_coeffective(cokernel_pair(f)));
        });
  }
}

TEST_CASE("evaluate_coprotomodularity_case examples") {
  SUBCASE("iso f propagates") {
    const Morphism alpha = fs(1, 3, {1});
    const Morphism f = fs(3, 3, {2, 0, 1});
    const auto v = evaluate_coprotomodularity_case(alpha, f);
    CHECK(v.h_is_iso);
    CHECK(v.f_is_iso);
  }
  SUBCASE("collapsing f gives non-iso h") {
    const auto v = evaluate_coprotomodularity_case(fs(1, 3, {0}),
                                                   fs(3, 2, {0, 0, 1}));
    CHECK_FALSE(v.h_is_iso);
    CHECK_FALSE(v.f_is_iso);
  }
  SUBCASE("hypothesis violations throw") {
    CHECK_THROWS_AS(
        evaluate_coprotomodularity_case(fs(2, 2, {0, 0}), fs(2, 2, {0, 1})),
        std::invalid_argument);
    // f alpha not mono
    CHECK_THROWS_AS(
        evaluate_coprotomodularity_case(fs(2, 3, {0, 1}), fs(3, 1, {0, 0, 0})),
        std::invalid_argument);
  }
}

TEST_CASE("subobject_lattice: powerset of a 2-element set") {
  const auto lat = subobject_lattice(obj(finset(), 2));
  CHECK(lat.subs.size() == 4);
}

TEST_CASE("subobject_lattice: the empty object has one subobject") {
  const auto lat = subobject_lattice(obj(finset(), 0));
  CHECK(lat.subs.size() == 1);
}

TEST_CASE("subobject_lattice: F2 line has exactly 0 and itself") {
  const auto lat = subobject_lattice(obj(finvect(2), 1));
  CHECK(lat.subs.size() == 2);
}

TEST_CASE("subobject_lattice: guard exceeded throws") {
  CHECK_THROWS_AS(subobject_lattice(obj(finset(), 7)),
                  std::invalid_argument);
}

TEST_CASE("monos are equalizers of their cokernel pairs, small sweep") {
  for (const Instance inst : {finset(), finvect(2), pfinset()}) {
    const int lo = min_object_size(inst);
    for (int s = lo; s <= 2; ++s)
      for (int a = std::max(lo, s); a <= 3; ++a)
        for_each_mono(inst, s, a, [&](const Morphism& m) {
          const Corelation ck = cokernel_pair(m);
          const Morphism eq = equalizer(ck.q1, ck.q2);
          CHECK(image_equal(m, eq));
        });
  }
}

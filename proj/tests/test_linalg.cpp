#include "doctest.h"

#include <stdexcept>

#include "catcheck/linalg.hpp"
#include "catcheck/unionfind.hpp"

using namespace catcheck;
using fp::Mat;

TEST_CASE("rref: rank-1 matrix over F2") {
  Mat m{2, 2, 2, {1, 1, 1, 1}};
  const auto e = fp::rref(m);
  CHECK(e.rank == 1);
  CHECK(e.pivots == std::vector<int>{0});
  CHECK(e.m.e == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("rref: identity is already reduced") {
  const Mat id = fp::identity(3, 5);
  const auto e = fp::rref(id);
  CHECK(e.rank == 3);
  CHECK(e.m == id);
}

TEST_CASE("rref: zero matrix has rank 0") {
  const auto e = fp::rref(fp::zeros(2, 3, 3));
  CHECK(e.rank == 0);
  CHECK(e.pivots.empty());
}

TEST_CASE("nullspace of [1 0 1] over F2 has dimension 2") {
  Mat m{1, 3, 2, {1, 0, 1}};
  const Mat k = fp::nullspace(m);
  CHECK(k.cols == 2);
  CHECK(fp::mul(m, k) == fp::zeros(1, 2, 2));
}

TEST_CASE("canonical_columns is invariant under column operations") {
  Mat a{3, 2, 2, {1, 1, 0, 1, 1, 0}};
  // same column space, different spanning set: swapped and summed columns
  Mat b{3, 3, 2, {1, 0, 1, 1, 1, 0, 0, 1, 1}};
  CHECK(fp::rank(a) == 2);
  CHECK(fp::canonical_columns(a) == fp::canonical_columns(b));
  // idempotent
  CHECK(fp::canonical_columns(fp::canonical_columns(a)) ==
        fp::canonical_columns(a));
}

TEST_CASE("solve finds the unique preimage through a full-column-rank matrix") {
  Mat a{3, 2, 3, {1, 0, 0, 1, 1, 1}};
  Mat x{2, 1, 3, {2, 1}};
  const Mat b = fp::mul(a, x);
  auto got = fp::solve(a, b);
  REQUIRE(got.has_value());
  CHECK(*got == x);
  // inconsistent system
  Mat bad = b;
  bad.at(2, 0) = fp::norm_mod(bad.at(2, 0) + 1, 3);
  CHECK_FALSE(fp::solve(a, bad).has_value());
}

TEST_CASE("quotient_map kills exactly the span") {
  Mat span{3, 1, 2, {1, 1, 0}};
  const Mat q = fp::quotient_map(span, 3, 2);
  CHECK(q.rows == 2);
  CHECK(fp::mul(q, span) == fp::zeros(2, 1, 2));
  CHECK(fp::rank(q) == 2);
}

TEST_CASE("for_each_subspace counts match the Galois numbers") {
  int count = 0;
  fp::for_each_subspace(2, 2, [&](const Mat&) { ++count; });
  CHECK(count == 5);  // F2^2: 0, three lines, the plane
  count = 0;
  fp::for_each_subspace(3, 2, [&](const Mat&) { ++count; });
  CHECK(count == 16);
  count = 0;
  fp::for_each_subspace(2, 3, [&](const Mat&) { ++count; });
  CHECK(count == 6);  // F3^2: 0, four lines, the plane
}

TEST_CASE("union_find_quotient: closure by hand-checkable merge") {
  const auto q = union_find_quotient(3, {{0, 1}});
  CHECK(q.classes == 2);
  CHECK(q.projection == std::vector<int>{0, 0, 1});
}

TEST_CASE("union_find_quotient: no merges is the identity projection") {
  const auto q = union_find_quotient(4, {});
  CHECK(q.classes == 4);
  CHECK(q.projection == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("union_find_quotient: transitive closure") {
  const auto q = union_find_quotient(4, {{0, 1}, {1, 2}});
  CHECK(q.classes == 2);
  CHECK(q.projection == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("union_find_quotient: index out of range throws") {
  const std::vector<std::pair<int, int>> bad{{0, 2}};
  CHECK_THROWS_AS(union_find_quotient(2, bad), std::out_of_range);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

TEST_CASE("rref of identity and zero") {
  auto r = rref(Matrix::identity(3));
  CHECK(r.m == Matrix::identity(3));
  CHECK(r.pivots == std::vector<int>{0, 1, 2});
  CHECK(r.rank == 3);
  auto z = rref(Matrix(2, 4));
  CHECK(z.m.is_zero());
  CHECK(z.pivots.empty());
  CHECK(z.rank == 0);
}

TEST_CASE("rref of a rank one matrix") {
  auto r = rref(mat({{2, 4}, {1, 2}}));
  CHECK(r.m == mat({{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<int>{0});
}

TEST_CASE("rref over a prime field") {
  FieldScope fs(Field::prime(7));
  auto r = rref(mat({{3, 6}, {1, 2}}));
  CHECK(r.rank == 1);
  CHECK(r.m(0, 1) == Scalar(2));
  CHECK((Scalar(3) * Scalar(5)).residue() == 1);
  CHECK(Scalar(3).inv() == Scalar(5));
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::identity(4)).empty());
  CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
  auto m = mat({{1, 1, 0}});
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (auto& v : k) CHECK(is_zero(m.apply(v)));
  CHECK(same_span(k, {vec({1, -1, 0}), vec({0, 0, 1})}, 3));
}

TEST_CASE("solve") {
  auto b = vec({3, -1, 2});
  auto x = solve(Matrix::identity(3), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK(!solve(Matrix(2, 2), vec({1, 0})));
  auto m = mat({{1, 2}, {2, 4}});
  auto y = solve(m, vec({1, 2}));
  REQUIRE(y);
  CHECK(m.apply(*y) == vec({1, 2}));
  CHECK(!solve(m, vec({1, 3})));
}

TEST_CASE("subspace operations") {
  auto e1 = unit_vec(2, 0), e2 = unit_vec(2, 1);
  CHECK(subspace_intersection({e1}, {e2}, 2).empty());
  auto c = quotient_complement({e1, e2}, {e1}, 2);
  REQUIRE(c.size() == 1);
  CHECK(!in_span({e1}, c[0]));
  CHECK(subspace_sum({e1}, {e2}, 2).size() == 2);
  CHECK(same_span({vec({1, 1}), vec({1, -1})}, {e1, e2}, 2));
}

TEST_CASE("inverse and determinant") {
  auto m = mat({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(2));
  CHECK(det(m) == Scalar(1));
  CHECK(!inverse(mat({{1, 2}, {2, 4}})));
}

TEST_CASE("characteristic polynomial") {
  auto p = char_poly(mat({{0, 1}, {1, 0}}));
  auto expected = Polynomial::linear_root(Scalar(1)) * Polynomial::linear_root(Scalar(-1));
  CHECK(p == expected);
  CHECK(p.factored_str({Scalar(1), Scalar(-1)}) == "(t - 1)(t + 1)");
}

TEST_CASE("echelon coordinates") {
  Echelon e(3);
  CHECK(e.insert(vec({1, 1, 0})));
  CHECK(e.insert(vec({0, 1, 1})));
  CHECK(!e.insert(vec({1, 2, 1})));
  auto c = e.coordinates(vec({2, 3, 1}));
  REQUIRE(c);
  CHECK(*c == vec({2, 1}));
}

TEST_CASE("primes") {
  CHECK(is_prime(101));
  CHECK(!is_prime(91));
  CHECK(smallest_prime_congruent_one(3, 100) == 103);
}

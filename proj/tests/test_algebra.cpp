#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

TEST_CASE("path algebra dimensions") {
  auto a = build_path_algebra(line_quiver(2), {});
  CHECK(a.dim() == 3);
  a.verify_associative();

  // full DAG on three vertices: e_i plus paths along increasing sequences
  Quiver q;
  q.n = 3;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) q.arrows.push_back({i, j, "x" + std::to_string(i + 1) + std::to_string(j + 1)});
  CHECK(build_path_algebra(q, {}).dim() == 7);

  auto chain = build_path_algebra(line_quiver(3), {monomial_relation({1, 0})});
  CHECK(chain.dim() == 5);
}

TEST_CASE("auslander algebra dimensions") {
  for (int n = 1; n <= 4; ++n) {
    int expected = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) expected += n - std::max(i, j) + 1;
    CHECK(auslander(n)->dim() == expected);
  }
  CHECK(auslander(1)->dim() == 1);
  CHECK(auslander(3)->dim() == 14);
}

TEST_CASE("radical") {
  auto semisimple = algebra(build_path_algebra(Quiver{3, {}, {}}, {}));
  CHECK(semisimple->radical().empty());
  CHECK(semisimple->is_split());

  auto a = build_path_algebra(line_quiver(2), {});
  REQUIRE(a.radical().size() == 1);
  CHECK(a.radical()[0] == a.basis_vec(basis_index(a, "a1")));

  CHECK(auslander(2)->radical().size() == 3);
  CHECK(auslander(3)->radical().size() == 14 - 3);
  CHECK(dual_numbers()->radical().size() == 1);
}

TEST_CASE("units") {
  auto a = build_path_algebra(line_quiver(2), {});
  CHECK(is_invertible(a, a.unit()));
  CHECK(!is_invertible(a, a.basis_vec(basis_index(a, "a1"))));
  auto u = a.unit() + a.basis_vec(basis_index(a, "a1"));
  auto inv = inverse_element(a, u);
  REQUIRE(inv);
  CHECK(a.mul(u, *inv) == a.unit());
}

TEST_CASE("opposite algebra") {
  auto a = build_path_algebra(line_quiver(3), {});
  auto op = opposite(a);
  CHECK(op.dim() == a.dim());
  op.verify_associative();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) CHECK(op.mul(i, j) == a.mul(j, i));
}

TEST_CASE("subalgebra closure") {
  auto a = algebra(build_path_algebra(line_quiver(3), {}));
  auto one = subalgebra_closure(a, {a->unit()});
  CHECK(one.sub->dim() == 1);
  one.verify();

  auto diag = subalgebra_closure(a, a->idempotents());
  CHECK(diag.sub->dim() == 3);
  diag.verify();

  auto b = build_description(example_two_source());
  auto& r = *b.amb;
  std::vector<Vec> gens{named(r, {{1, "id1"}, {1, "id3'"}}), named(r, {{1, "id2"}}), named(r, {{1, "id3"}}),
                        named(r, {{1, "f21"}, {1, "f23'"}}), named(r, {{1, "f33'"}})};
  auto emb = subalgebra_closure(b.amb, gens);
  emb.verify();
  CHECK(emb.sub->dim() == 5);
  CHECK(same_span(emb.image_span(), b.subs[0].emb.image_span(), r.dim()));
}

TEST_CASE("second example basis") {
  auto b = build_description(example_two_source());
  CHECK(b.a->dim() == 5);
  CHECK(b.amb->dim() == 9);
  auto& emb = b.subs[0].emb;
  CHECK(emb.sub->dim() == 5);
  auto& r = *b.amb;
  CHECK(emb.image_basis(basis_index(*emb.sub, "a'")) == named(r, {{1, "f21"}, {1, "f23'"}}));
  CHECK(emb.image_basis(basis_index(*emb.sub, "e1")) == named(r, {{1, "id1"}, {1, "id3'"}}));
  for (const char* n : {"id1", "id3'", "id2", "id3", "f3'3", "f21", "f23'", "f23", "f33'"})
    CHECK(basis_index(r, n) >= 0);
}

TEST_CASE("endomorphism algebras") {
  auto a = algebra(build_path_algebra(line_quiver(3), {}));
  auto end = endomorphism_algebra({regular_module(a)});
  CHECK(end.alg->dim() == a->dim());
  end.alg->verify_associative();

  auto aus = auslander(2);
  std::vector<Representation> ps;
  for (int i = 0; i < 2; ++i) ps.push_back(projective_module(aus, aus->idempotent(i)));
  CHECK(endomorphism_algebra(ps).alg->dim() == 5);

  auto pe = projective_endomorphisms(aus, aus->idempotents());
  CHECK(pe.alg->dim() == 5);
  pe.alg->verify_associative();
}

TEST_CASE("character of the group action on the second example") {
  auto b = build_description(example_two_source());
  REQUIRE(b.action_amb);
  auto polys = action_char_polys(*b.action_amb);
  auto t1 = Polynomial::linear_root(Scalar(1)), t2 = Polynomial::linear_root(Scalar(-1));
  REQUIRE(polys.size() == 2);
  CHECK(polys[0] == t1.pow(9));
  CHECK(polys[1] == t1.pow(8) * t2);
  CHECK(linear_map_char_poly(Matrix::identity(9)) == t1.pow(9));
}

TEST_CASE("arrow generators and isomorphism extension") {
  auto a = build_path_algebra(line_quiver(3), {});
  auto gens = arrow_generators(a);
  CHECK(gens.size() == 2);
  auto iso = extend_to_isomorphism(a, gens, a, {a.idempotent(0), a.idempotent(1), a.idempotent(2),
                                                 scaled(gens[0].v, Scalar(2)), scaled(gens[1].v, Scalar(-1))});
  REQUIRE(iso);
  CHECK(det(*iso) != Scalar(0));
}

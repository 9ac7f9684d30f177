#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

namespace {

std::vector<Representation> auslander_deltas(const AlgebraPtr& a) {
  return standard_modules(a, SimpleOrder::chain(a->num_simples()));
}

}  // namespace

TEST_CASE("simple modules") {
  auto a = algebra(build_path_algebra(line_quiver(2), {}));
  auto s = simple_modules(a);
  REQUIRE(s.size() == 2);
  CHECK(s[0].dim() == 1);
  CHECK(s[1].dim() == 1);
  CHECK(simple_modules(auslander(3)).size() == 3);
  CHECK(simple_modules(auslander(1)).size() == 1);
}

TEST_CASE("regular and projective modules") {
  auto a = auslander(3);
  auto reg = regular_module(a);
  reg.verify();
  CHECK(reg.dim() == 14);
  for (int i = 0; i < 3; ++i) {
    auto p = projective_module(a, a->idempotent(i));
    p.verify();
    int expected = 0;
    for (int j = 1; j <= 3; ++j) expected += 3 - std::max(i + 1, j) + 1;
    CHECK(p.dim() == expected);
  }
}

TEST_CASE("projective covers") {
  auto a = auslander(3);
  auto s = simple_modules(a);
  for (int i = 0; i < 3; ++i) {
    auto c = projective_cover(s[i]);
    REQUIRE(c.summands.size() == 1);
    CHECK(c.summands[0] == i);
    CHECK(c.module.dim() == projective_module(a, a->idempotent(i)).dim());
    CHECK(is_module_map(c.module, s[i], c.surjection));
  }
  auto b = build_description(example_two_source());
  auto deltas = standard_modules(b.a, b.order);
  auto c = projective_cover(deltas[0]);
  CHECK(c.module.dim() == 2);
}

TEST_CASE("minimal projective resolutions") {
  auto a = auslander(3);
  auto p = minimal_projective_resolution(projective_module(a, a->idempotent(1)), 4);
  CHECK(p.length() == 0);

  auto d = auslander_deltas(a);
  for (int k = 0; k < 2; ++k) {
    auto r = minimal_projective_resolution(d[k], 4);
    REQUIRE(r.length() == 1);
    REQUIRE(r.terms[0].size() == 1);
    REQUIRE(r.terms[1].size() == 1);
    CHECK(r.terms[0][0] == a->idempotent(k));
    CHECK(r.terms[1][0] == a->idempotent(k + 1));
    CHECK(homology_dim(r, 1) == 0);
  }
  CHECK(minimal_projective_resolution(d[2], 4).length() == 0);

  auto dn = dual_numbers();
  CHECK_THROWS_AS(minimal_projective_resolution(simple_modules(dn)[0], 3), ScopeError);
  CHECK(minimal_projective_resolution(simple_modules(dn)[0], 3, true).length() == 3);
}

TEST_CASE("hom spaces") {
  for (int n = 2; n <= 4; ++n) {
    auto a = auslander(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto pi = projective_module(a, a->idempotent(i)), pj = projective_module(a, a->idempotent(j));
        CHECK(static_cast<int>(hom_space(pi, pj).size()) == n - std::max(i, j));
      }
  }
  auto a = algebra(build_path_algebra(line_quiver(2), {}));
  auto s = simple_modules(a);
  CHECK(hom_space(s[0], s[1]).empty());
  for (auto& d : auslander_deltas(auslander(3))) CHECK(hom_space(d, d).size() == 1);
}

TEST_CASE("ext spaces") {
  for (int n = 2; n <= 4; ++n) {
    auto d = auslander_deltas(auslander(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(ext_space(d[i], d[j], 1).dim == (i < j ? 1 : 0));
        for (int k = 2; k <= 4; ++k) CHECK(ext_space(d[i], d[j], k).dim == 0);
      }
  }
  auto l = simple_modules(dual_numbers())[0];
  CHECK(ext_space(l, l, 1).dim == 1);
  CHECK(ext_space(l, l, 2).dim == 1);
}

TEST_CASE("module isomorphism") {
  auto a = auslander(3);
  auto p = projective_module(a, a->idempotent(0));
  auto same = module_isomorphic(p, p);
  CHECK(same.decision == Decision::yes);
  REQUIRE(same.witness);
  CHECK(is_module_map(p, p, *same.witness));
  auto q = projective_module(a, a->idempotent(1));
  CHECK(module_isomorphic(p, q).decision == Decision::no);
  auto s = simple_modules(a);
  CHECK(module_isomorphic(s[0], s[1]).decision == Decision::no);
}

TEST_CASE("induction along a subalgebra") {
  auto a = algebra(build_path_algebra(line_quiver(3), {}));
  auto id = subalgebra_closure(a, a->generators());
  CHECK(is_induction_exact(id));
  auto ind = induce(id, regular_module(id.sub));
  CHECK(module_isomorphic(ind.module, regular_module(a)).decision == Decision::yes);

  auto scalars = subalgebra_closure(a, {a->unit()});
  CHECK(is_induction_exact(scalars));
}

TEST_CASE("induced simples of the auslander pair are standard") {
  auto b = build_description(example_auslander(3));
  auto& emb = b.subs[0].emb;
  CHECK(is_induction_exact(emb));
  auto deltas = standard_modules(b.amb, b.amb_order);
  std::vector<int> hit(deltas.size(), 0);
  for (auto& l : simple_modules(emb.sub)) {
    auto ind = induce(emb, l);
    int found = 0;
    for (size_t j = 0; j < deltas.size(); ++j)
      if (module_isomorphic(ind.module, deltas[j]).decision == Decision::yes) {
        ++found;
        ++hit[j];
      }
    CHECK(found == 1);
  }
  for (int h : hit) CHECK(h == 1);
}

TEST_CASE("tensor classes over a non-full subalgebra") {
  auto b = build_description(example_yuehui());
  auto& emb = b.subs[0].emb;
  auto l1 = simple_modules(emb.sub)[0];
  auto ind = induce(emb, l1);
  CHECK(ind.module.dim() == 1);
  auto ba = b.amb->basis_vec(basis_index(*b.amb, "betaalpha"));
  CHECK(is_zero(ind.tensor_class(ba, unit_vec(1, 0))));
  CHECK(!is_zero(ind.tensor_class(b.amb->unit(), unit_vec(1, 0))));
}

TEST_CASE("second example standard modules") {
  auto b = build_description(example_two_source());
  auto d = standard_modules(b.a, b.order);
  REQUIRE(d.size() == 3);
  CHECK(d[0].dim() == 1);
  CHECK(d[1].dim() == 1);
  CHECK(d[2].dim() == 2);
}

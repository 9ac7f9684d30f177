#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

namespace {

ExtModel auslander_model(int n) {
  auto a = auslander(n);
  return ext_model(standard_modules(a, SimpleOrder::chain(n)), 4, n + 3, true);
}

int degree_one(const AInftyAlgebra& m, int src, int tgt) {
  for (int i = 0; i < m.dim(); ++i)
    if (m.basis().deg[i] == 1 && m.basis().src[i] == src && m.basis().tgt[i] == tgt) return i;
  return -1;
}

Matrix one() { return Matrix::identity(1); }

// Rank-two twist L_s + L_t glued by a degree-one element from s to t.
TwistedModule glue(const AInftyPtr& base, int s, int t, int xi) {
  std::vector<int> dims(base->nobj(), 0);
  dims[s] = dims[t] = 1;
  auto tw = zero_twist(base, dims);
  tw.add(xi, tw.place(s, t, one()));
  return tw;
}

}  // namespace

TEST_CASE("triangularity") {
  auto m = auslander_model(3);
  AInftyPtr base = m.transfer.model;
  CHECK(is_triangular(zero_twist(base, {1, 1, 1})));
  int x12 = degree_one(*base, 0, 1), x23 = degree_one(*base, 1, 2);
  auto t = zero_twist(base, {1, 1, 1});
  t.add(x12, t.place(0, 1, one()));
  t.add(x23, t.place(1, 2, one()));
  CHECK(is_triangular(t));

  GradedBasis b;
  b.nobj = 1;
  b.add(0, 0, 0, "1");
  b.add(1, 0, 0, "x");
  auto loop = std::make_shared<AInftyAlgebra>(b, std::vector<Vec>{unit_vec(2, 0)}, 3);
  auto l = zero_twist(loop, {1});
  l.add(1, one());
  CHECK(!is_triangular(l));
}

TEST_CASE("Maurer-Cartan equation") {
  auto m = auslander_model(3);
  AInftyPtr base = m.transfer.model;
  for (int a = 0; a < 3; ++a) CHECK(mc_defect(simple_twist(base, a)).empty());
  auto g = glue(base, 0, 1, degree_one(*base, 0, 1));
  CHECK(is_maurer_cartan(g));
  auto t = zero_twist(base, {1, 1, 1});
  t.add(degree_one(*base, 0, 1), t.place(0, 1, one()));
  t.add(degree_one(*base, 1, 2), t.place(1, 2, one()));
  CHECK(is_maurer_cartan(t));

  auto chain = algebra(build_path_algebra(line_quiver(3), {monomial_relation({1, 0})}));
  auto cm = ext_model(simple_modules(chain), 4, 5, true);
  AInftyPtr cb = cm.transfer.model;
  auto c = zero_twist(cb, {1, 1, 1});
  c.add(degree_one(*cb, 0, 1), c.place(0, 1, one()));
  c.add(degree_one(*cb, 1, 2), c.place(1, 2, one()));
  CHECK(!mc_defect(c).empty());
}

TEST_CASE("degree zero homs") {
  auto m = auslander_model(3);
  AInftyPtr base = m.transfer.model;
  for (int a = 0; a < 3; ++a) CHECK(h0_hom(simple_twist(base, a), simple_twist(base, a)).dim == 1);

  auto b = algebra(build_path_algebra(line_quiver(2), {}));
  auto e = ext_model(simple_modules(b), 3, 4, true);
  AInftyPtr eb = e.transfer.model;
  CHECK(h0_hom(simple_twist(eb, 0), simple_twist(eb, 1)).dim == 0);
  CHECK(h0_hom(simple_twist(eb, 1), simple_twist(eb, 0)).dim == 0);
}

TEST_CASE("realization of twisted modules") {
  auto m = auslander_model(3);
  AInftyPtr base = m.transfer.model;
  auto& incl = *m.transfer.inclusion;
  for (int a = 0; a < 3; ++a) {
    auto r = realize(m.dg, twmod_apply(incl, simple_twist(base, a)));
    CHECK(module_isomorphic(r, m.modules[a]).decision == Decision::yes);
  }
  CHECK(realize(m.dg, twmod_apply(incl, zero_twist(base, {0, 0, 0}))).dim() == 0);

  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t) {
      auto r = realize(m.dg, twmod_apply(incl, glue(base, s, t, degree_one(*base, s, t))));
      CHECK(r.dim() == s + t + 2);
      auto split = direct_sum({m.modules[s], m.modules[t]});
      CHECK(module_isomorphic(r, split).decision == Decision::no);
      CHECK(hom_space(r, r).size() < hom_space(split, split).size());
      CHECK(ext_space(m.modules[t], m.modules[s], 1).dim + ext_space(m.modules[s], m.modules[t], 1).dim == 1);
    }
}

TEST_CASE("pushing twists along morphisms") {
  auto m = auslander_model(3);
  AInftyPtr base = m.transfer.model;
  auto g = glue(base, 0, 2, degree_one(*base, 0, 2));
  auto id = identity_morphism(base);
  auto same = twmod_apply(id, g);
  CHECK(same.dims == g.dims);
  REQUIRE(same.w.size() == g.w.size());
  for (auto& [xi, mat] : g.w) CHECK(same.w.at(xi) == mat);

  auto pushed = twmod_apply(*m.transfer.inclusion, g);
  CHECK(is_maurer_cartan(pushed));
  auto r = realize(m.dg, pushed);
  CHECK(h0_hom(pushed, pushed).dim == static_cast<int>(hom_space(r, r).size()));
}

TEST_CASE("extensions of twisted modules") {
  auto m = auslander_model(3);
  AInftyPtr base = m.transfer.model;
  int xi = degree_one(*base, 0, 1);
  auto lower = simple_twist(base, 1), upper = simple_twist(base, 0);
  auto e = twist_of_extension(lower, upper, {{xi, one()}});
  CHECK(e.total() == 2);
  CHECK(is_maurer_cartan(e));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

namespace {

SVec single(int i, long c = 1) {
  SVec v;
  v.add(i, Scalar(c));
  return v;
}

// k[x]/x^4 concentrated in degree 0.
std::shared_ptr<AInftyAlgebra> truncated_polynomial(long twist = 1) {
  GradedBasis b;
  b.nobj = 1;
  for (int k = 0; k < 4; ++k) b.add(0, 0, 0, "x" + std::to_string(k));
  auto a = std::make_shared<AInftyAlgebra>(b, std::vector<Vec>{unit_vec(4, 0)}, 4);
  for (int i = 1; i < 4; ++i)
    for (int j = 1; i + j < 4; ++j) a->set_op({i, j}, single(i + j, i == 2 && j == 1 ? twist : 1));
  return a;
}

ExtModel auslander_model(int n, bool positive_only) {
  auto a = auslander(n);
  return ext_model(standard_modules(a, SimpleOrder::chain(n)), 4, n + 3, positive_only);
}

int higher_ops(const AInftyAlgebra& a) {
  int count = 0;
  for (auto& [args, v] : a.table())
    if (args.size() >= 3 && !v.empty()) ++count;
  return count;
}

}  // namespace

TEST_CASE("associative algebras have zero Stasheff defect") {
  auto a = truncated_polynomial();
  CHECK(check_stasheff(*a, 4).ok());
  CHECK(check_strict_unit(*a, 3));
}

TEST_CASE("a corrupted sign is detected") {
  auto a = truncated_polynomial(-1);
  auto r = check_stasheff(*a, 3);
  CHECK(!r.ok());
  CHECK(r.defects[2] > 0);
}

TEST_CASE("dg endomorphism algebra is an A-infinity algebra") {
  auto m = auslander_model(3, false);
  CHECK(m.dg.dga->is_dg());
  CHECK(check_stasheff(*m.dg.dga, 3).ok());
}

int total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

TEST_CASE("minimal model of the standard modules") {
  for (int n = 2; n <= 4; ++n) {
    auto m = auslander_model(n, true);
    auto& model = *m.transfer.model;
    CHECK(model.is_minimal());
    CHECK(is_coconnected(model));
    CHECK(check_stasheff(model, 4).ok());
    CHECK(check_morphism(*m.transfer.inclusion, 3).ok());
    CHECK(higher_ops(model) == 0);
    CHECK(total(model.basis().dims_in_degree(0)) == n);
    CHECK(total(model.basis().dims_in_degree(1)) == n * (n - 1) / 2);
    CHECK(model.basis().dims_in_degree(2) == std::vector<int>(n * n, 0));
  }
}

TEST_CASE("full minimal model keeps the degree zero homs") {
  auto a = auslander(3);
  auto d = standard_modules(a, SimpleOrder::chain(3));
  auto m = ext_model(d, 4, 6, false);
  auto& model = *m.transfer.model;
  CHECK(model.is_minimal());
  CHECK(check_stasheff(model, 4).ok());
  auto d0 = model.basis().dims_in_degree(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d0[j * 3 + i] == static_cast<int>(hom_space(d[i], d[j]).size()));
  CHECK(!is_coconnected(model));
  CHECK(truncate(model)->dim() == 6);
}

TEST_CASE("radical square zero chain has a nonzero Yoneda product") {
  auto a = algebra(build_path_algebra(line_quiver(3), {monomial_relation({1, 0})}));
  auto m = ext_model(simple_modules(a), 4, 5, true);
  auto& model = *m.transfer.model;
  CHECK(check_stasheff(model, 4).ok());
  auto& b = model.basis();
  int nonzero = 0;
  for (int x = 0; x < model.dim(); ++x)
    for (int y = 0; y < model.dim(); ++y) {
      if (b.deg[x] != 1 || b.deg[y] != 1 || !b.composable({x, y})) continue;
      auto v = model.m(std::vector<int>{x, y});
      if (v.empty()) continue;
      ++nonzero;
      for (auto& [i, c] : v.e) CHECK(b.deg[i] == 2);
    }
  CHECK(nonzero == 1);
}

TEST_CASE("truncation") {
  auto m = auslander_model(3, true);
  auto t = truncate(*m.transfer.model);
  CHECK(t->dim() == m.transfer.model->dim());

  auto k = algebra(build_path_algebra(Quiver{1, {}, {}}, {}));
  auto s = simple_modules(k)[0];
  auto e = ext_model({s, s}, 2, 3, false);
  CHECK(total(e.transfer.model->basis().dims_in_degree(0)) == 4);
  CHECK(!is_coconnected(*e.transfer.model));
  auto tr = truncate(*e.transfer.model);
  CHECK(tr->dim() == 2);
  CHECK(is_coconnected(*tr));
}

TEST_CASE("composition and inversion of morphisms") {
  auto m = auslander_model(3, true);
  AInftyPtr model = m.transfer.model;
  auto id = identity_morphism(model);
  CHECK(morphisms_equal(compose(id, id, 3), id, 3));

  auto& b = model->basis();
  int x12 = -1, x23 = -1, x13 = -1;
  for (int i = 0; i < model->dim(); ++i) {
    if (b.deg[i] != 1) continue;
    if (b.src[i] == 0 && b.tgt[i] == 1) x12 = i;
    if (b.src[i] == 1 && b.tgt[i] == 2) x23 = i;
    if (b.src[i] == 0 && b.tgt[i] == 2) x13 = i;
  }
  REQUIRE(x12 >= 0);
  REQUIRE(x23 >= 0);
  REQUIRE(x13 >= 0);

  AInftyMorphism f(model, model);
  for (int i = 0; i < model->dim(); ++i)
    if (!model->is_unit(i)) f.set({i}, single(i, i == x12 ? 2 : 1));
  f.set({x23, x12}, single(x13));
  CHECK(check_morphism(f, 3).ok());

  auto g = invert(f, 3);
  CHECK(morphisms_equal(compose(f, g, 3), id, 3));
  CHECK(morphisms_equal(compose(g, f, 3), id, 3));
  CHECK(!g.f(std::vector<int>{x23, x12}).empty());
}

TEST_CASE("strict morphisms compose to their linear composite") {
  auto m = auslander_model(2, false);
  AInftyPtr model = m.transfer.model;
  AInftyMorphism f(model, model), g(model, model);
  for (int i = 0; i < model->dim(); ++i) {
    if (model->is_unit(i)) continue;
    f.set({i}, single(i, 3));
    g.set({i}, single(i, -2));
  }
  auto h = compose(f, g, 3);
  for (int i = 0; i < model->dim(); ++i)
    if (!model->is_unit(i)) CHECK(h.f(std::vector<int>{i}) == single(i, -6));
  CHECK(h.table().size() == f.table().size());
}

TEST_CASE("completing a triangle") {
  auto m = auslander_model(3, true);
  AInftyPtr model = m.transfer.model;
  auto id = identity_morphism(model);
  auto g = complete_triangle(id, id, 3);
  CHECK(morphisms_equal(g, id, 3));

  auto k = algebra(build_path_algebra(Quiver{1, {}, {}}, {}));
  auto s = simple_modules(k)[0];
  auto e = ext_model({s, s}, 2, 3, false);
  auto eid = identity_morphism(e.transfer.model);
  CHECK_THROWS_AS(complete_triangle(eid, eid, 2), ScopeError);
}

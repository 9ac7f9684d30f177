#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

TEST_CASE("simple orders") {
  SimpleOrder o(4, {{0, 1}, {1, 2}, {0, 3}});
  CHECK(o.less(0, 2));
  CHECK(!o.less(3, 2));
  CHECK(!o.less(2, 3));
  CHECK(o.less_eq(3, 3));
  CHECK(o.covers().size() == 3);
  CHECK_THROWS_AS(SimpleOrder(2, {{0, 1}, {1, 0}}), ScopeError);
  auto c = SimpleOrder::chain(3);
  CHECK(c.less(0, 2));
  auto p = c.pullback({2, 1, 0});
  CHECK(p.less(2, 0));
}

TEST_CASE("standard modules of a directed algebra are simple") {
  auto a = algebra(build_path_algebra(line_quiver(3), {}));
  auto d = standard_modules(a, SimpleOrder::chain(3));
  auto s = simple_modules(a);
  REQUIRE(d.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(module_isomorphic(d[i], s[i]).decision == Decision::yes);
  CHECK(check_quasi_hereditary(a, SimpleOrder::chain(3)).ok);
}

TEST_CASE("standard modules of auslander algebras") {
  for (int n = 2; n <= 4; ++n) {
    auto a = auslander(n);
    auto d = standard_modules(a, SimpleOrder::chain(n));
    REQUIRE(static_cast<int>(d.size()) == n);
    for (int i = 0; i < n; ++i) {
      CHECK(d[i].dim() == i + 1);
      auto m = composition_multiplicities(d[i]);
      for (int j = 0; j < n; ++j) CHECK(m[j] == (j <= i ? 1 : 0));
      auto t = top_multiplicities(d[i]);
      for (int j = 0; j < n; ++j) CHECK(t[j] == (j == i ? 1 : 0));
    }
    auto r = check_quasi_hereditary(a, SimpleOrder::chain(n));
    CHECK(r.ok);
    for (int e : r.end_dims) CHECK(e == 1);
  }
}

TEST_CASE("dual numbers are not quasi-hereditary") {
  auto a = dual_numbers();
  auto r = check_quasi_hereditary(a, SimpleOrder::chain(1));
  CHECK(!r.ok);
  REQUIRE(r.end_dims.size() == 1);
  CHECK(r.end_dims[0] == 2);
  CHECK(r.diagnostics.find("End(Delta_1) has dim 2") != std::string::npos);
}

TEST_CASE("delta filtrations") {
  auto a = auslander(3);
  auto d = standard_modules(a, SimpleOrder::chain(3));
  for (int j = 0; j < 3; ++j) {
    auto f = delta_filtration(d[j], d);
    REQUIRE(f);
    CHECK(*f == std::vector<int>{j});
  }
  for (int i = 0; i < 3; ++i) {
    auto f = delta_filtration(projective_module(a, a->idempotent(i)), d);
    REQUIRE(f);
    std::vector<int> expected;
    for (int k = i; k < 3; ++k) expected.push_back(k);
    CHECK(*f == expected);
  }
  CHECK(!delta_filtration(simple_modules(a)[1], d));
}

TEST_CASE("second example is quasi-hereditary") {
  auto b = build_description(example_two_source());
  CHECK(check_quasi_hereditary(b.a, b.order).ok);
  CHECK(check_quasi_hereditary(b.amb, b.amb_order).ok);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

namespace {

Polynomial power(long root, int e) { return Polynomial::linear_root(Scalar(root)).pow(e); }

// (t - 1)^a (t + 1)^b
Polynomial pm(int a, int b) { return power(1, a) * power(-1, b); }

std::string key(const Polynomial& p) { return p.str(); }

// Two copies of 1 -> 3 swapped by the generator; the order 1 < 3 is not carried to 2 < 4.
struct Swapped {
  AlgebraPtr a;
  GroupAction act;
};

Swapped swapped_pair() {
  Quiver q;
  q.n = 4;
  q.arrows = {{0, 2, "a"}, {1, 3, "b"}};
  auto a = algebra(build_path_algebra(q, {}));
  std::vector<int> perm(a->dim());
  auto idx = [&](const std::string& n) { return basis_index(*a, n); };
  std::vector<std::pair<std::string, std::string>> swaps{{"e1", "e2"}, {"e3", "e4"}, {"a", "b"}};
  Matrix g(a->dim(), a->dim());
  for (auto& [x, y] : swaps) {
    g(idx(y), idx(x)) = Scalar(1);
    g(idx(x), idx(y)) = Scalar(1);
  }
  return {a, cyclic_action(a, g, 2)};
}

}  // namespace

TEST_CASE("cyclic groups") {
  auto g = FiniteGroup::cyclic(4);
  CHECK(g.order() == 4);
  int id = g.identity();
  for (int x = 0; x < 4; ++x) CHECK(g.mul[x][g.inverse(x)] == id);
}

TEST_CASE("skew group algebras") {
  auto a = algebra(build_path_algebra(line_quiver(2), {}));
  auto one = skew_group_algebra(trivial_action(a, FiniteGroup::cyclic(1)));
  CHECK(one.dim() == a->dim());

  auto k = algebra(build_path_algebra(Quiver{1, {}, {}}, {}));
  auto kg = skew_group_algebra(trivial_action(k, FiniteGroup::cyclic(2)));
  CHECK(kg.dim() == 2);
  kg.verify_associative();

  auto b = build_description(example_two_source());
  REQUIRE(b.action_a);
  b.action_a->verify();
  auto s = skew_group_algebra(*b.action_a);
  CHECK(s.dim() == 10);
  s.verify_associative();
}

TEST_CASE("invariant orders") {
  auto a = algebra(build_path_algebra(line_quiver(3), {}));
  CHECK(check_invariant_order(trivial_action(a, FiniteGroup::cyclic(3)), SimpleOrder::chain(3)));

  auto b = build_description(example_two_source());
  CHECK(check_invariant_order(*b.action_a, b.order));
  CHECK(check_invariant_order(*b.action_amb, b.amb_order));

  auto sw = swapped_pair();
  sw.act.verify();
  CHECK(simple_permutation(sw.act, 1) == std::vector<int>{1, 0, 3, 2});
  CHECK(!check_invariant_order(sw.act, SimpleOrder(4, {{0, 2}})));
  CHECK(!check_invariant_order(sw.act, SimpleOrder(4, {{0, 2}, {1, 3}})));
  CHECK(check_invariant_order(sw.act, SimpleOrder(4, {})));
}

TEST_CASE("twisting the action by a cocycle") {
  auto b = build_description(example_two_source());
  auto& act = *b.action_amb;
  auto& r = *b.amb;

  auto same = twist_action(act, cyclic_cocycle(act, r.unit()));
  for (int g = 0; g < 2; ++g) CHECK(same.maps[g] == act.maps[g]);

  CHECK(action_char_polys(trivial_action(b.amb, FiniteGroup::cyclic(2)))[1] == pm(9, 0));
  CHECK(action_char_polys(act)[1] == pm(8, 1));

  for (long eps : {1L, -1L}) {
    auto rho = named(r, {{1, "id1"}, {eps, "id2"}, {-1, "id3"}, {-1, "id3'"}});
    auto c = cyclic_cocycle(act, rho);
    CHECK(cocycle_defect(act, c).empty());
    auto tw = twist_action(act, c);
    tw.verify();
    CHECK(tw.apply(1, r.basis_vec(basis_index(r, "f21"))) == named(r, {{-eps, "f21"}}));
    CHECK(action_char_polys(tw)[1] == power(1, 6) * power(-eps, 3));
  }

  auto singular = named(r, {{1, "id1"}, {1, "id2"}, {1, "id3"}});
  CHECK_THROWS(twist_action(act, cyclic_cocycle(act, singular)));
}

TEST_CASE("classification of compatible twists for the second example") {
  auto b = build_description(example_two_source());
  auto cls = classify_compatible_twists(*b.action_amb, b.subs[0].emb);
  CHECK(cls.complete);
  REQUIRE(!cls.families.empty());
  std::set<std::string> found, expected;
  bool has_parameter = false;
  for (auto& f : cls.families) {
    found.insert(key(f.char_polys[1]));
    if (f.parameters > 0) has_parameter = true;
    auto c = cyclic_cocycle(*b.action_amb, f.sample);
    CHECK(cocycle_defect(*b.action_amb, c).empty());
    auto tw = twist_action(*b.action_amb, c);
    auto moved = tw.maps[1] * b.subs[0].emb.map;
    CHECK(same_span(b.subs[0].emb.image_span(),
                    SubalgebraEmbedding{b.subs[0].emb.sub, b.amb, moved}.image_span(), b.amb->dim()));
  }
  CHECK(has_parameter);
  // (t-1)^6 (t+e)^3 and (t-1)^4 (t+1)^2 (t+e)^2 (t-e) for e = 1, -1
  for (long e : {1L, -1L}) {
    expected.insert(key(power(1, 6) * power(-e, 3)));
    expected.insert(key(power(1, 4) * power(-1, 2) * power(-e, 2) * power(e, 1)));
  }
  CHECK(found == expected);
  CHECK(found.count(key(pm(8, 1))) == 0);
}

TEST_CASE("obstruction verdicts") {
  auto b = build_description(example_two_source());
  auto ob = invariant_borel_obstruction(*b.action_amb, b.subs[0].emb);
  CHECK(ob.verdict == ObstructionResult::Verdict::obstructed);
  CHECK(verdict_str(ob.verdict) == "obstructed");
  REQUIRE(ob.base_polys.size() == 2);
  CHECK(ob.base_polys[1] == pm(8, 1));
  CHECK(!ob.witness);

  auto triv = trivial_action(b.amb, FiniteGroup::cyclic(2));
  auto t = invariant_borel_obstruction(triv, b.subs[0].emb);
  CHECK(t.verdict == ObstructionResult::Verdict::exists);
  REQUIRE(t.witness);
  auto tc = classify_compatible_twists(triv, b.subs[0].emb);
  bool has_one = false;
  for (auto& f : tc.families)
    if (f.representative == b.amb->unit() || f.sample == b.amb->unit()) has_one = true;
  CHECK(has_one);
}

TEST_CASE("auslander pair with a cyclic action") {
  std::string field = "fp:" + std::to_string(smallest_prime_congruent_one(3, 100));
  auto d = example_auslander(3, field);
  FieldScope fs(Field::parse(field));
  auto b = build_description(d);
  REQUIRE(b.action_amb);
  REQUIRE(b.subs[0].action);
  auto& emb = b.subs[0].emb;
  CHECK(equivariance_check(emb, *b.subs[0].action, *b.action_amb));
  CHECK(equivariance_check(emb, trivial_action(emb.sub, FiniteGroup::cyclic(3)),
                           trivial_action(b.amb, FiniteGroup::cyclic(3))));

  // scale the arrow 1 -> 3 of B, which is not a factor of any product, by an extra power of xi
  auto bad = *b.subs[0].action;
  int arrow = basis_index(*emb.sub, "(1,3)");
  REQUIRE(arrow >= 0);
  Matrix gen = bad.maps[1];
  for (int r = 0; r < gen.rows(); ++r) gen(r, arrow) = gen(r, arrow) * *b.xi;
  auto mutated = cyclic_action(emb.sub, gen, 3);
  CHECK(!equivariance_check(emb, mutated, *b.action_amb));

  auto ob = invariant_borel_obstruction(*b.action_amb, emb);
  CHECK(ob.verdict == ObstructionResult::Verdict::exists);
}

TEST_CASE("auslander n = 2 twists") {
  auto b = build_description(example_auslander(2));
  REQUIRE(b.action_amb);
  auto cls = classify_compatible_twists(*b.action_amb, b.subs[0].emb);
  CHECK(!cls.families.empty());
}

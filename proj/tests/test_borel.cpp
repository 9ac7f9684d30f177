#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

namespace {

// Counted directly from 0/1 strings: alpha ranges over strings with last entry 1, the first 1 fixes the
// summand Q_s and j(alpha) is one past the last zero.
struct Combinatorics {
  int dim_r = 0;
  std::vector<std::vector<int>> q;
};

Combinatorics count_strings(int n) {
  Combinatorics c;
  c.q.assign(n, std::vector<int>(n, 0));
  for (int mask = 0; mask < (1 << n); ++mask) {
    auto bit = [&](int k) { return (mask >> (k - 1)) & 1; };
    if (!bit(n)) continue;
    int first = 1, last_zero = 0;
    while (!bit(first)) ++first;
    for (int k = 1; k <= n; ++k)
      if (!bit(k)) last_zero = k;
    int j = last_zero + 1;
    c.q[first - 1][j - 1] += 1;
    for (int t = j; t <= n; ++t) c.dim_r += 1 << (t - 1);
  }
  return c;
}

bool all_flags(const BorelReport& r) {
  return r.exact && r.simples_to_standards && r.directed && r.normal == Decision::yes && r.regular;
}

SubalgebraEmbedding moved(const SubalgebraEmbedding& e, const Matrix& g) { return {e.sub, e.amb, g * e.map}; }

}  // namespace

TEST_CASE("fenwick combinatorics") {
  auto f2 = fenwick_projectives(2);
  CHECK(f2.index_set.size() == 2);
  CHECK(f2.find({0, 1}) >= 0);
  CHECK(f2.find({1, 1}) >= 0);
  CHECK(f2.q[0] == std::vector<int>{1, 0});
  CHECK(f2.q[1] == std::vector<int>{0, 1});

  auto f3 = fenwick_projectives(3);
  CHECK(f3.j[f3.find({1, 0, 1})] == 3);
  CHECK(f3.j[f3.find({1, 1, 1})] == 1);
  CHECK(f3.q[0] == std::vector<int>{1, 0, 1});
  CHECK(FenwickData::label({1, 0, 1}) == "101");

  for (int n = 1; n <= 6; ++n) {
    auto f = fenwick_projectives(n);
    auto c = count_strings(n);
    CHECK(f.q == c.q);
    CHECK(static_cast<int>(f.index_set.size()) == 1 << (n - 1));
  }
}

TEST_CASE("synthesis for auslander algebras") {
  for (int n = 2; n <= 3; ++n) {
    auto a = auslander(n);
    auto s = synthesize_borel_pair(a, SimpleOrder::chain(n));
    auto c = count_strings(n);
    CHECK(s.r.alg->dim() == c.dim_r);
    CHECK(s.b.alg->dim() == (1 << n) - 1);
    CHECK(s.b.relations.empty());
    CHECK(s.b.quiver.arrows.size() == static_cast<size_t>(n * (n - 1) / 2));
    for (int i = 0; i < n; ++i) {
      std::vector<int> mult(n, 0);
      for (int k : s.q_classes[i]) ++mult[k];
      CHECK(mult == c.q[i]);
    }
    CHECK(all_flags(s.report));
    for (auto& g : s.report.regularity) {
      CHECK(g.dim_sub == g.dim_amb);
      CHECK(g.rank == g.dim_sub);
    }
    s.iota.verify();
  }
  CHECK(synthesize_borel_pair(auslander(2), SimpleOrder::chain(2)).r.alg->dim() == 5);
  CHECK(synthesize_borel_pair(auslander(3), SimpleOrder::chain(3)).r.alg->dim() == 21);
}

TEST_CASE("synthesis for a directed algebra returns the algebra") {
  auto a = algebra(build_path_algebra(line_quiver(3), {monomial_relation({1, 0})}));
  auto s = synthesize_borel_pair(a, SimpleOrder::chain(3));
  CHECK(s.b.alg->dim() == a->dim());
  CHECK(s.r.alg->dim() == a->dim());
  CHECK(s.b.relations.size() == 1);
  CHECK(all_flags(s.report));
}

TEST_CASE("exact Borel subalgebra of the auslander pair") {
  auto b = build_description(example_auslander(3));
  auto r = verify_exact_borel(b.amb, b.amb_order, b.subs[0].emb);
  CHECK(all_flags(r));
  CHECK(!r.strong);
  CHECK(is_normal_complement(b.subs[0].emb, r.normal_complement));
  auto split = r.splitting(b.subs[0].emb);
  CHECK(split * b.subs[0].emb.map == Matrix::identity(b.subs[0].emb.sub->dim()));

  auto lemmas = check_strong_lemmas(b.amb, b.amb_order, b.subs[0].emb, 3);
  CHECK(lemmas.ok());
  CHECK(!lemmas.strong);
  CHECK(lemmas.samples > 0);
}

TEST_CASE("a basic directed algebra is its own Borel subalgebra") {
  auto a = algebra(build_path_algebra(line_quiver(3), {}));
  auto emb = subalgebra_closure(a, a->generators());
  CHECK(emb.sub->dim() == a->dim());
  auto r = verify_exact_borel(a, SimpleOrder::chain(3), emb);
  CHECK(all_flags(r));
  CHECK(r.strong);
  auto lemmas = check_strong_lemmas(a, SimpleOrder::chain(3), emb);
  CHECK(lemmas.strong);
  CHECK(lemmas.ok());
}

TEST_CASE("second example") {
  auto b = build_description(example_two_source());
  auto& emb = b.subs[0].emb;
  auto r = verify_exact_borel(b.amb, b.amb_order, emb);
  CHECK(all_flags(r));

  REQUIRE(b.action_amb);
  auto gb = moved(emb, b.action_amb->maps[1]);
  gb.verify();
  auto u = named(*b.amb, {{1, "id1"}, {1, "id2"}, {1, "id3"}, {-1, "id3'"}});
  CHECK(verify_conjugation(emb, gb, u));
  CHECK(!verify_conjugation(emb, gb, b.amb->unit()));

  auto c = conjugate_subalgebras(emb, gb);
  CHECK(c.decision == Decision::yes);
  REQUIRE(c.unit);
  CHECK(verify_conjugation(emb, gb, *c.unit));

  auto d = check_diagram_commutes(emb, gb, *c.unit);
  CHECK(d.ok);
  CHECK(d.twists >= 10);
  CHECK(d.passed == d.simples + d.twists);
}

TEST_CASE("conjugation") {
  auto b = build_description(example_auslander(3));
  auto& emb = b.subs[0].emb;
  auto same = conjugate_subalgebras(emb, emb);
  REQUIRE(same.unit);
  CHECK(verify_conjugation(emb, emb, *same.unit));
  auto d = check_diagram_commutes(emb, emb, b.amb->unit(), 2);
  CHECK(d.ok);

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto u = random_unit(*b.amb, seed);
    CHECK(is_invertible(*b.amb, u));
    auto e2 = conjugate_embedding(emb, u);
    CHECK(verify_conjugation(emb, e2, u));
    auto c = conjugate_subalgebras(emb, e2, seed);
    REQUIRE(c.unit);
    CHECK(verify_conjugation(emb, e2, *c.unit));
  }
}

TEST_CASE("reconstruction from minimal models") {
  auto k2 = algebra(build_path_algebra(Quiver{2, {}, {}}, {}));
  auto e = ext_model(simple_modules(k2), 2, 3, true);
  auto rec = reconstruct(*e.transfer.model);
  CHECK(rec.alg->dim() == 2);
  CHECK(rec.quiver.arrows.empty());

  for (int n = 2; n <= 4; ++n) {
    auto a = auslander(n);
    auto m = ext_model(standard_modules(a, SimpleOrder::chain(n)), 4, n + 3, true);
    auto r = reconstruct(*m.transfer.model);
    CHECK(r.alg->dim() == (1 << n) - 1);
    CHECK(r.relations.empty());
    for (auto& arrow : r.quiver.arrows) CHECK(arrow.src < arrow.tgt);
  }

  auto chain = algebra(build_path_algebra(line_quiver(3), {monomial_relation({1, 0})}));
  auto cm = ext_model(simple_modules(chain), 4, 5, true);
  auto cr = reconstruct(*cm.transfer.model);
  CHECK(cr.alg->dim() == 5);
  CHECK(cr.relations.size() == 1);
  CHECK(cr.quiver.arrows.size() == 2);
}

TEST_CASE("modules over the reconstructed algebra") {
  auto a = auslander(3);
  auto m = ext_model(standard_modules(a, SimpleOrder::chain(3)), 4, 6, true);
  AInftyPtr model = m.transfer.model;
  auto rec = reconstruct(*model);
  auto simples = simple_modules(rec.alg);
  for (int i = 0; i < 3; ++i) {
    auto k = keller_module(rec, simple_twist(model, i));
    k.verify();
    CHECK(k.dim() == 1);
    CHECK(composition_multiplicities(k)[i] == 1);
  }
  int xi = rec.model_index[0];
  auto& bb = model->basis();
  auto t = zero_twist(model, {0, 0, 0});
  std::vector<int> dims(3, 0);
  dims[bb.src[xi]] = dims[bb.tgt[xi]] = 1;
  t = zero_twist(model, dims);
  t.add(xi, t.place(bb.src[xi], bb.tgt[xi], Matrix::identity(1)));
  auto k = keller_module(rec, t);
  k.verify();
  CHECK(k.dim() == 2);
  int nonzero = 0;
  for (int arrow = 0; arrow < static_cast<int>(rec.quiver.arrows.size()); ++arrow)
    if (!k.action(rec.arrow_basis[arrow]).is_zero()) ++nonzero;
  CHECK(nonzero == 1);

  auto reg = regular_module(rec.alg);
  auto mt = twist_from_module(model, rec, reg);
  auto back = keller_module(rec, mt.twist);
  CHECK(back.dim_vector() == reg.dim_vector());
  CHECK(module_isomorphic(back, reg).decision == Decision::yes);
}

TEST_CASE("non-full exact Borel subalgebra of a path algebra") {
  auto b = build_description(example_yuehui());
  auto& emb = b.subs[0].emb;
  CHECK(emb.sub->dim() == 4);
  auto r = verify_exact_borel(b.a, b.order, emb);
  CHECK(r.exact);
  CHECK(r.simples_to_standards);
  CHECK(r.directed);
}

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <set>

#include "suites.hpp"

using namespace qha;
using namespace qha::test;

namespace {

using Clock = std::chrono::steady_clock;

Outcome criterion1() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    auto t0 = Clock::now();
    auto a = auslander(n);
    int expected = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) expected += n - std::max(i, j) + 1;
    o.require(a->dim() == expected, "n=" + str(n) + " dim " + str(a->dim()) + " != " + str(expected));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        auto pi = projective_module(a, a->idempotent(i - 1)), pj = projective_module(a, a->idempotent(j - 1));
        int h = static_cast<int>(hom_space(pi, pj).size());
        o.require(h == n - std::max(i, j) + 1, "n=" + str(n) + " Hom(P" + str(i) + ",P" + str(j) + ") = " + str(h));
      }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(secs < kSecondsPerAuslander, "n=" + str(n) + " took " + std::to_string(secs) + " s");
  }
  if (auslander(3)->dim() != 14) o.fail("n=3 dim is not 14");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    auto d = standard_modules(auslander(n), SimpleOrder::chain(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int e1 = ext_space(d[i], d[j], 1).dim;
        o.require(e1 == (i < j ? 1 : 0), "n=" + str(n) + " Ext^1(D" + str(i + 1) + ",D" + str(j + 1) + ") = " + str(e1));
        for (int k = 2; k <= kMaxExtDegree; ++k) {
          int e = ext_space(d[i], d[j], k).dim;
          o.require(e == 0, "n=" + str(n) + " Ext^" + str(k) + " nonzero");
        }
      }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    auto a = auslander(n);
    auto m = ext_model(standard_modules(a, SimpleOrder::chain(n)), kMaxExtDegree, kArityCap, true);
    auto& model = *m.transfer.model;
    std::string tag = "n=" + str(n) + " ";
    o.require(model.is_minimal(), tag + "model not minimal");
    o.require(check_stasheff(model, kArityCap).ok(), tag + "Stasheff defect");
    o.require(higher_ops(model) == 0, tag + str(higher_ops(model)) + " nonzero m_k, k >= 3");
    auto d0 = model.basis().dims_in_degree(0), d1 = model.basis().dims_in_degree(1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        o.require(d0[j * n + i] == (i == j ? 1 : 0), tag + "degree 0 is not L");
        o.require(d1[j * n + i] == ext_space(m.modules[i], m.modules[j], 1).dim, tag + "degree 1 is not Ext^1");
      }
    o.require(model.dim() == n + n * (n - 1) / 2, tag + "extra degrees in the model");
    auto r = reconstruct(model);
    o.require(r.alg->dim() == (1 << n) - 1, tag + "reconstructed dim " + str(r.alg->dim()));
    o.require(r.relations.empty(), tag + "reconstructed algebra has relations");
    std::set<std::pair<int, int>> arrows;
    for (auto& ar : r.quiver.arrows) arrows.insert({ar.src, ar.tgt});
    o.require(static_cast<int>(arrows.size()) == n * (n - 1) / 2 &&
                  static_cast<int>(r.quiver.arrows.size()) == n * (n - 1) / 2,
              tag + "quiver is not the full DAG");
    for (auto& [s, t] : arrows) o.require(s < t, tag + "arrow against the order");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    std::string tag = "n=" + str(n) + " ";
    auto a = auslander(n);
    BorelOptions opt;
    opt.regular_up_to = kRegularUpTo;
    auto s = synthesize_borel_pair(a, SimpleOrder::chain(n), kArityCap + 1, opt);
    auto c = count_strings(n);
    auto f = fenwick_projectives(n);
    o.require(s.r.alg->dim() == c.dim_r, tag + "dim R " + str(s.r.alg->dim()) + " != " + str(c.dim_r));
    o.require(f.q == c.q, tag + "fenwick data disagrees with the string count");
    for (int i = 0; i < n; ++i) {
      std::vector<int> mult(n, 0);
      for (int k : s.q_classes[i]) ++mult[k];
      o.require(mult == f.q[i], tag + "Q_" + str(i + 1) + " multiplicities");
    }
    auto& r = s.report;
    o.require(r.exact, tag + "not exact");
    o.require(r.simples_to_standards, tag + "simples not sent to standards");
    o.require(r.directed, tag + "not directed");
    o.require(r.normal == Decision::yes && is_normal_complement(s.iota, r.normal_complement), tag + "not normal");
    o.require(r.regular, tag + "not regular");
    o.require(static_cast<int>(r.regularity.size()) >= kRegularUpTo, tag + "regularity degrees missing");
    for (auto& g : r.regularity)
      o.require(g.dim_sub == g.dim_amb && g.rank == g.dim_sub, tag + "degree " + str(g.degree) + " not iso");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto b = build_description(example_two_source());
  auto& emb = b.subs[0].emb;
  auto r = verify_exact_borel(b.amb, b.amb_order, emb);
  o.require(borel_flags(r), "not a regular exact Borel subalgebra: " + r.diagnostics);
  SubalgebraEmbedding gb{emb.sub, emb.amb, b.action_amb->maps[1] * emb.map};
  auto c = conjugate_subalgebras(emb, gb);
  o.require(c.unit && verify_conjugation(emb, gb, *c.unit), "no verified unit for g(B)");
  auto u = named(*b.amb, {{1, "id1"}, {1, "id2"}, {1, "id3"}, {-1, "id3'"}});
  o.require(verify_conjugation(emb, gb, u), "known witness rejected");
  auto ob = invariant_borel_obstruction(*b.action_amb, emb);
  o.require(verdict_str(ob.verdict) == "obstructed", "verdict " + verdict_str(ob.verdict));
  o.require(ob.base_polys.size() == 2 && ob.base_polys[1] == linear_power(1, 8) * linear_power(-1, 1),
            "base char poly");
  std::set<std::string> found, expected;
  for (auto& f : ob.twists.families) found.insert(f.char_polys[1].str());
  for (long e : {1L, -1L}) {
    expected.insert((linear_power(1, 6) * linear_power(-e, 3)).str());
    expected.insert((linear_power(1, 4) * linear_power(-1, 2) * linear_power(-e, 2) * linear_power(e, 1)).str());
  }
  o.require(found == expected, "twisted char polys differ");
  o.require(!found.count(ob.base_polys[1].str()), "base polynomial among the twists");
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto b = build_description(example_yuehui());
  auto& emb = b.subs[0].emb;
  auto l1 = simple_modules(emb.sub)[0];
  auto ind = induce(emb, l1);
  o.require(ind.module.dim() == 1, "dim A (x)_B L_1 = " + str(ind.module.dim()));
  auto ba = b.amb->basis_vec(basis_index(*b.amb, "betaalpha"));
  o.require(!in_span(emb.image_span(), ba), "beta alpha lies in B");
  o.require(is_zero(ind.tensor_class(ba, unit_vec(l1.dim(), 0))), "beta alpha (x) 1 is nonzero");
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::pair<std::string, std::function<Outcome()>>> suites{
      {"stasheff", [] { return stasheff_suite(); }},
      {"faithful", [] { return faithfulness_suite(); }},
      {"diagram", [] { return diagram_suite(); }},
      {"round trip", [] { return round_trip_suite(); }},
      {"lemmas", [] { return lemma_suite(); }},
  };
  for (auto& [name, run] : suites) {
    auto r = run();
    if (!r.ok) o.fail(name + ": " + r.detail);
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto p = smallest_prime_congruent_one(3, 100);
  std::string field = "fp:" + std::to_string(p);
  auto d = example_auslander(3, field);
  FieldScope fs(Field::parse(field));
  auto b = build_description(d);
  if (!b.subs[0].action || !b.action_amb || !b.xi) {
    o.fail("no group data");
    return o;
  }
  auto& emb = b.subs[0].emb;
  o.require(equivariance_check(emb, *b.subs[0].action, *b.action_amb), "iota is not equivariant");
  Scalar xi = *b.xi;
  o.require(xi.pow(3).is_one() && !xi.is_one(), "xi is not a primitive cube root");
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      int k = basis_index(*emb.sub, "(" + str(i) + "," + str(j) + ")");
      if (k < 0) {
        o.fail("no arrow (" + str(i) + "," + str(j) + ")");
        continue;
      }
      auto img = b.subs[0].action->apply(1, emb.sub->basis_vec(k));
      o.require(img == scaled(emb.sub->basis_vec(k), xi.pow(-j + i + 1)),
                "g(" + str(i) + "," + str(j) + ") is not xi^" + str(-j + i + 1) + " times it");
    }
  return o;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7, criterion8};
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1;
    std::cout << " (" << static_cast<int>(secs * 1000) << " ms)";
    if (!o.ok) std::cout << ": " << o.detail;
    std::cout << "\n";
    if (!o.ok) ++failed;
  }
  return failed ? 1 : 0;
}

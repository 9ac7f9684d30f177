#pragma once

#include <chrono>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

namespace qha::test {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

constexpr double kSecondsPerAuslander = 1.0;
constexpr int kMaxExtDegree = 4;
constexpr int kRegularUpTo = 4;
constexpr int kArityCap = 5;
constexpr int kFaithfulPairs = 20;
constexpr int kDiagramTwists = 10;
constexpr int kRoundTrips = 20;

inline std::string str(int x) { return std::to_string(x); }

// Counted from 0/1 strings alpha with last entry 1: the first 1 names Q_s, and P_j(alpha) contributes
// sum_{t >= j(alpha)} 2^(t-1) to dim R, with j(alpha) one past the last zero.
struct StringCount {
  int dim_r = 0;
  std::vector<std::vector<int>> q;
};

inline StringCount count_strings(int n) {
  StringCount c;
  c.q.assign(n, std::vector<int>(n, 0));
  for (int mask = 0; mask < (1 << n); ++mask) {
    auto bit = [&](int k) { return (mask >> (k - 1)) & 1; };
    if (!bit(n)) continue;
    int first = 1, last_zero = 0;
    while (!bit(first)) ++first;
    for (int k = 1; k <= n; ++k)
      if (!bit(k)) last_zero = k;
    c.q[first - 1][last_zero] += 1;
    for (int t = last_zero + 1; t <= n; ++t) c.dim_r += 1 << (t - 1);
  }
  return c;
}

inline Polynomial linear_power(long root, int e) { return Polynomial::linear_root(Scalar(root)).pow(e); }

inline int higher_ops(const AInftyAlgebra& a) {
  int count = 0;
  for (auto& [args, v] : a.table())
    if (args.size() >= 3 && !v.empty()) ++count;
  return count;
}

inline bool borel_flags(const BorelReport& r) {
  return r.exact && r.simples_to_standards && r.directed && r.normal == Decision::yes && r.regular;
}

// Algebras with a family of modules whose Ext algebra is transferred.
struct CorpusEntry {
  std::string name;
  AlgebraPtr a;
  std::vector<Representation> modules;
};

inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (int n = 2; n <= 4; ++n) {
    auto a = auslander(n);
    out.push_back({"auslander-" + str(n), a, standard_modules(a, SimpleOrder::chain(n))});
  }
  auto t = build_description(example_two_source());
  out.push_back({"two-source", t.a, standard_modules(t.a, t.order)});
  auto y = build_description(example_yuehui());
  out.push_back({"yuehui", y.a, standard_modules(y.a, y.order)});
  out.push_back({"yuehui-directed", y.a, simple_modules(y.a)});
  auto chain = algebra(build_path_algebra(line_quiver(3), {monomial_relation({1, 0})}));
  out.push_back({"chain", chain, simple_modules(chain)});
  return out;
}

inline TwistedModule random_twist(const AInftyPtr& base, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-2, 2), size(0, 2);
  for (;;) {
    std::vector<int> dims;
    for (int a = 0; a < base->nobj(); ++a) dims.push_back(size(rng));
    auto t = zero_twist(base, dims);
    for (int xi = 0; xi < base->dim(); ++xi) {
      if (base->basis().deg[xi] != 1) continue;
      int s = base->basis().src[xi], g = base->basis().tgt[xi];
      Matrix b(dims[g], dims[s]);
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) b(i, j) = Scalar(entry(rng));
      if (!b.is_zero()) t.add(xi, t.place(s, g, b));
    }
    if (is_triangular(t) && is_maurer_cartan(t)) return t;
  }
}

inline Outcome stasheff_suite() {
  Outcome o;
  for (auto& c : corpus()) {
    auto m = ext_model(c.modules, kMaxExtDegree, kArityCap, true);
    auto r = check_stasheff(*m.transfer.model, kArityCap);
    o.require(r.ok(), c.name + " model defects " + r.str());
    auto full = ext_model(c.modules, kMaxExtDegree, kArityCap, false);
    auto rf = check_stasheff(*full.transfer.model, kArityCap);
    o.require(rf.ok(), c.name + " full model defects " + rf.str());
  }
  return o;
}

inline Outcome faithfulness_suite(std::uint64_t seed = 5) {
  Outcome o;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (auto& c : corpus()) {
    auto m = ext_model(c.modules, kMaxExtDegree, kArityCap, true);
    AInftyPtr base = m.transfer.model;
    int good = 0;
    for (int k = 0; k < kFaithfulPairs; ++k) {
      auto x = twmod_apply(*m.transfer.inclusion, random_twist(base, rng));
      auto y = twmod_apply(*m.transfer.inclusion, random_twist(base, rng));
      int h = h0_hom(x, y).dim;
      int hom = static_cast<int>(hom_space(realize(m.dg, x), realize(m.dg, y)).size());
      if (h == hom) ++good;
    }
    o.require(good == kFaithfulPairs, c.name + " faithful on " + str(good) + "/" + str(kFaithfulPairs));
  }
  return o;
}

struct BorelPair {
  std::string name;
  SubalgebraEmbedding b, b2;
  Vec u;
};

inline std::vector<SubalgebraEmbedding> borel_examples(std::vector<std::string>* names = nullptr) {
  std::vector<SubalgebraEmbedding> out;
  for (int n = 2; n <= 3; ++n) {
    out.push_back(build_description(example_auslander(n)).subs[0].emb);
    if (names) names->push_back("auslander-" + str(n));
  }
  out.push_back(build_description(example_two_source()).subs[0].emb);
  if (names) names->push_back("two-source");
  return out;
}

inline Outcome diagram_suite() {
  Outcome o;
  std::vector<std::string> names;
  auto exs = borel_examples(&names);
  auto t = build_description(example_two_source());
  auto& emb = t.subs[0].emb;
  std::vector<BorelPair> pairs;
  for (size_t i = 0; i < exs.size(); ++i) {
    auto u = random_unit(*exs[i].amb, 17 + i);
    pairs.push_back({names[i] + " conjugate", exs[i], conjugate_embedding(exs[i], u), u});
  }
  SubalgebraEmbedding gb{emb.sub, emb.amb, t.action_amb->maps[1] * emb.map};
  auto c = conjugate_subalgebras(emb, gb);
  if (!c.unit) {
    o.fail("two-source g(B) not conjugate");
  } else {
    pairs.push_back({"two-source g(B)", emb, gb, *c.unit});
  }
  for (auto& p : pairs) {
    auto d = check_diagram_commutes(p.b, p.b2, p.u, kDiagramTwists);
    o.require(d.ok, p.name + ": " + d.diagnostics);
    o.require(d.simples == p.b.sub->num_simples(), p.name + " simples checked " + str(d.simples));
    o.require(d.twists >= kDiagramTwists, p.name + " twists " + str(d.twists));
    o.require(static_cast<int>(d.witnesses.size()) == d.passed && d.passed == d.simples + d.twists,
              p.name + " witnesses " + str(static_cast<int>(d.witnesses.size())));
  }
  return o;
}

inline Outcome round_trip_suite() {
  Outcome o;
  std::vector<std::string> names;
  auto exs = borel_examples(&names);
  for (size_t i = 0; i < exs.size(); ++i) {
    int good = 0;
    for (int k = 0; k < kRoundTrips; ++k) {
      auto u = random_unit(*exs[i].amb, 1000 + 31 * k);
      auto e2 = conjugate_embedding(exs[i], u);
      auto c = conjugate_subalgebras(exs[i], e2, k + 1);
      if (c.unit && verify_conjugation(exs[i], e2, *c.unit)) ++good;
    }
    o.require(good == kRoundTrips, names[i] + " round trips " + str(good) + "/" + str(kRoundTrips));
  }
  return o;
}

inline Outcome lemma_suite() {
  Outcome o;
  std::vector<std::string> names;
  auto exs = borel_examples(&names);
  std::vector<SimpleOrder> orders;
  for (int n = 2; n <= 3; ++n) orders.push_back(build_description(example_auslander(n)).amb_order);
  orders.push_back(build_description(example_two_source()).amb_order);
  for (size_t i = 0; i < exs.size(); ++i) {
    auto l = check_strong_lemmas(exs[i].amb, orders[i], exs[i], 7);
    o.require(l.ok(), names[i] + ": " + l.diagnostics);
    o.require(l.samples > 0, names[i] + " has no samples");
  }
  std::vector<AlgebraPtr> directed{
      algebra(build_path_algebra(line_quiver(3), {})),
      algebra(build_path_algebra(line_quiver(3), {monomial_relation({1, 0})})),
      build_description(example_yuehui()).a,
  };
  for (size_t i = 0; i < directed.size(); ++i) {
    auto& a = directed[i];
    auto order = SimpleOrder::chain(a->num_simples());
    if (i == 2) order = SimpleOrder(3, {{0, 2}, {2, 1}});
    auto full = subalgebra_closure(a, a->generators());
    auto l = check_strong_lemmas(a, order, full, 7);
    o.require(l.strong && l.radical_inclusion && l.top_equality && l.ok(), "directed " + str(i) + ": " + l.diagnostics);
    auto r = verify_exact_borel(a, order, full);
    o.require(borel_flags(r) && r.strong, "directed " + str(i) + " is not its own Borel subalgebra");
    auto s = synthesize_borel_pair(a, order);
    o.require(s.b.alg->dim() == a->dim() && s.r.alg->dim() == a->dim(),
              "directed " + str(i) + " synthesis gives dim B " + str(s.b.alg->dim()));
  }
  return o;
}

}  // namespace qha::test

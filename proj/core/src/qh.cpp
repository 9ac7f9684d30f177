#include "qha/qh.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "qha/errors.hpp"
#include "qha/resolution.hpp"

namespace qha {

SimpleOrder::SimpleOrder(int n, const std::vector<std::pair<int, int>>& covers)
    : n_(n), lt_(static_cast<size_t>(n) * n, false) {
  for (auto [i, j] : covers) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw ScopeError("order relation refers to an unknown simple");
    lt_[static_cast<size_t>(i) * n + j] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (less(i, k))
        for (int j = 0; j < n; ++j)
          if (less(k, j)) lt_[static_cast<size_t>(i) * n + j] = true;
  for (int i = 0; i < n; ++i)
    if (less(i, i)) throw ScopeError("order relation has a cycle");
}

SimpleOrder SimpleOrder::chain(int n) {
  std::vector<std::pair<int, int>> c;
  for (int i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return SimpleOrder(n, c);
}

std::vector<std::pair<int, int>> SimpleOrder::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n_ && cover; ++k)
        if (less(i, k) && less(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

SimpleOrder SimpleOrder::pullback(const std::vector<int>& f) const {
  std::vector<std::pair<int, int>> c;
  const int m = static_cast<int>(f.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (less(f[i], f[j])) c.emplace_back(i, j);
  return SimpleOrder(m, c);
}

std::vector<Representation> standard_modules(const AlgebraPtr& a, const SimpleOrder& order) {
  a->require_split();
  const int n = a->num_simples();
  if (order.size() != n) throw ScopeError("order size does not match the number of simples");
  std::vector<Representation> out;
  for (int c = 0; c < n; ++c) {
    Representation p = projective_module(a, a->idempotent(a->class_members(c).front()));
    std::vector<Vec> gens;
    for (int c2 = 0; c2 < n; ++c2) {
      if (order.less_eq(c2, c)) continue;
      for (int i : a->class_members(c2)) {
        Matrix e = p.act(a->idempotent(i));
        for (int j = 0; j < e.cols(); ++j) gens.push_back(e.col(j));
      }
    }
    out.push_back(quotient(p, generated_submodule(p, gens)).mod);
  }
  return out;
}

namespace {

std::optional<Matrix> generic_surjection(const Representation& m, const Representation& d, std::mt19937_64& rng) {
  auto homs = hom_space(m, d);
  if (homs.empty()) return std::nullopt;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 0; attempt < 6; ++attempt) {
    Matrix f(d.dim(), m.dim());
    for (const auto& h : homs) f = f + h.scaled(Scalar(attempt == 0 ? 1 : coef(rng)));
    if (rank(f) == d.dim()) return f;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> delta_filtration(const Representation& m, const std::vector<Representation>& deltas) {
  std::mt19937_64 rng(7);
  long nodes = 0;
  std::function<std::optional<std::vector<int>>(const Representation&)> rec =
      [&](const Representation& x) -> std::optional<std::vector<int>> {
    if (x.dim() == 0) return std::vector<int>{};
    if (++nodes > 100000) return std::nullopt;
    auto tops = top_multiplicities(x);
    for (int j = static_cast<int>(deltas.size()) - 1; j >= 0; --j) {
      const Representation& d = deltas[j];
      if (d.dim() > x.dim() || d.dim() == 0) continue;
      auto td = top_multiplicities(d);
      bool fits = true;
      for (size_t c = 0; c < td.size(); ++c)
        if (td[c] > tops[c]) fits = false;
      if (!fits) continue;
      auto f = generic_surjection(x, d, rng);
      if (!f) continue;
      Subquotient k = submodule(x, kernel_basis(*f));
      auto rest = rec(k.mod);
      if (!rest) continue;
      std::vector<int> out{j};
      out.insert(out.end(), rest->begin(), rest->end());
      return out;
    }
    return std::nullopt;
  };
  return rec(m);
}

QhReport check_quasi_hereditary(const AlgebraPtr& a, const SimpleOrder& order) {
  QhReport rep;
  auto deltas = standard_modules(a, order);
  std::ostringstream diag;
  rep.ok = true;
  for (size_t c = 0; c < deltas.size(); ++c) {
    int e = static_cast<int>(hom_space(deltas[c], deltas[c]).size());
    rep.end_dims.push_back(e);
    if (e != 1) {
      rep.ok = false;
      diag << "End(Delta_" << c + 1 << ") has dim " << e << "; ";
    }
  }
  for (int c = 0; c < a->num_simples(); ++c) {
    auto f = delta_filtration(projective_module(a, a->idempotent(a->class_members(c).front())), deltas);
    rep.projective_filtrations.push_back(f);
    if (!f) {
      rep.ok = false;
      diag << "P_" << c + 1 << " has no Delta-filtration; ";
    }
  }
  rep.diagnostics = diag.str();
  return rep;
}

Matrix BorelReport::splitting(const SubalgebraEmbedding& emb) const {
  const int n = emb.amb->dim(), b = emb.sub->dim();
  std::vector<Vec> cols;
  for (int k = 0; k < b; ++k) cols.push_back(emb.image_basis(k));
  for (const auto& v : normal_complement) cols.push_back(v);
  auto inv = inverse(Matrix::from_cols(cols, n));
  if (!inv) throw VerificationError("complement is not complementary");
  return inv->block(0, 0, b, n);
}

bool is_normal_complement(const SubalgebraEmbedding& emb, const std::vector<Vec>& c) {
  const FinDimAlgebra& a = *emb.amb;
  const int n = a.dim();
  auto im = emb.image_span();
  if (static_cast<int>(c.size() + im.size()) != n) return false;
  if (static_cast<int>(subspace_sum(c, im, n).size()) != n) return false;
  Echelon e(n);
  for (const auto& v : c) e.insert(v);
  for (const auto& v : c)
    for (int k = 0; k < n; ++k)
      if (!e.contains(a.mul(v, a.basis_vec(k)))) return false;
  return true;
}

std::optional<std::vector<Vec>> find_normal_complement(const SubalgebraEmbedding& emb, int attempts,
                                                       std::uint64_t seed) {
  const FinDimAlgebra& a = *emb.amb;
  const int n = a.dim();
  auto im = emb.image_span();
  const int target = n - static_cast<int>(im.size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int attempt = 0; attempt < std::max(1, attempts); ++attempt) {
    std::vector<Vec> cands;
    for (int k = 0; k < n; ++k) cands.push_back(a.basis_vec(k));
    if (attempt > 0) std::shuffle(cands.begin(), cands.end(), rng);
    if (attempt >= attempts / 2)
      for (int k = 0; k < n; ++k) {
        Vec v = zero_vec(n);
        for (int t = 0; t < n; ++t) v[t] = Scalar(coef(rng));
        cands.push_back(v);
      }
    std::vector<Vec> c;
    for (const auto& v : cands) {
      if (static_cast<int>(c.size()) == target) break;
      std::vector<Vec> gen = c;
      for (int k = 0; k < n; ++k) gen.push_back(a.mul(v, a.basis_vec(k)));
      auto j = span_basis(gen, n);
      if (j.size() == c.size()) continue;
      if (subspace_sum(j, im, n).size() != j.size() + im.size()) continue;
      c = std::move(j);
    }
    if (static_cast<int>(c.size()) == target && is_normal_complement(emb, c)) return c;
  }
  return std::nullopt;
}

bool is_strong(const SubalgebraEmbedding& emb) {
  for (const auto& e : emb.sub->idempotents()) {
    auto t = top_multiplicities(projective_module(emb.amb, emb.image(e)));
    int s = 0;
    for (int x : t) s += x;
    if (s != 1) return false;
  }
  return true;
}

namespace {

struct Cohomology {
  std::vector<Vec> cocycles, coboundaries;  // in global coordinates
};

Cohomology cohomology_in_degree(const AInftyAlgebra& a, int k) {
  const GradedBasis& b = a.basis();
  const int n = b.size();
  Cohomology out;
  std::vector<int> dk, dk1;
  for (int i = 0; i < n; ++i) {
    if (b.deg[i] == k) dk.push_back(i);
    if (b.deg[i] == k - 1) dk1.push_back(i);
  }
  Matrix d(n, static_cast<int>(dk.size()));
  for (size_t j = 0; j < dk.size(); ++j)
    for (const auto& [i, c] : a.m(std::vector<int>{dk[j]}).e) d(i, static_cast<int>(j)) = c;
  for (const auto& z : kernel_basis(d)) {
    Vec v = zero_vec(n);
    for (size_t j = 0; j < dk.size(); ++j) v[dk[j]] = z[j];
    out.cocycles.push_back(std::move(v));
  }
  std::vector<Vec> img;
  for (int x : dk1) img.push_back(a.m(std::vector<int>{x}).dense(n));
  out.coboundaries = span_basis(img, n);
  return out;
}

}  // namespace

std::vector<RegularityDegree> regularity_ranks(const SubalgebraEmbedding& emb, int up_to) {
  const AlgebraPtr& b = emb.sub;
  std::vector<ProjComplex> cb, ca;
  for (const auto& l : simple_modules(b)) {
    cb.push_back(minimal_projective_resolution(l, up_to + 1, true));
    ca.push_back(induce_complex(emb, cb.back()));
  }
  DgEnd eb = dg_endomorphisms(cb, 2), ea = dg_endomorphisms(ca, 2);
  const int na = ea.dga->dim();
  auto transport = [&](const Vec& x) {
    Vec out = zero_vec(na);
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
      if (x[i].is_zero()) continue;
      const auto& [blk, idx] = eb->basis[i];
      const auto& bl = eb->blocks[blk];
      int tb = ea->block_index(bl.a, bl.qa, bl.s, bl.b, bl.qb, bl.t);
      Vec img = emb.image(bl.corner[idx]);
      if (is_zero(img)) continue;
      if (tb < 0) throw VerificationError("induced element outside every block");
      axpy(out, x[i], ea->from_element(tb, img).dense(na));
    }
    return out;
  };
  std::vector<RegularityDegree> out;
  for (int k = 1; k <= up_to; ++k) {
    Cohomology hb = cohomology_in_degree(*eb.dga, k), ha = cohomology_in_degree(*ea.dga, k);
    RegularityDegree r;
    r.degree = k;
    r.dim_sub = static_cast<int>(hb.cocycles.size() - hb.coboundaries.size());
    r.dim_amb = static_cast<int>(ha.cocycles.size() - ha.coboundaries.size());
    std::vector<Vec> img = ha.coboundaries;
    for (const auto& z : hb.cocycles) img.push_back(transport(z));
    r.rank = static_cast<int>(span_basis(img, na).size() - ha.coboundaries.size());
    out.push_back(r);
  }
  return out;
}

namespace {

std::optional<std::vector<int>> match_standards(const SubalgebraEmbedding& emb, const std::vector<Representation>& deltas,
                                                std::string& diag) {
  auto simples = simple_modules(emb.sub);
  std::vector<int> phi;
  std::vector<bool> used(deltas.size(), false);
  for (size_t i = 0; i < simples.size(); ++i) {
    Representation m = induce(emb, simples[i]).module;
    int found = -1;
    for (size_t c = 0; c < deltas.size() && found < 0; ++c) {
      if (used[c] || deltas[c].dim() != m.dim()) continue;
      if (module_isomorphic(m, deltas[c]).decision == Decision::yes) found = static_cast<int>(c);
    }
    if (found < 0) {
      diag += "induced simple " + std::to_string(i + 1) + " matches no standard module; ";
      return std::nullopt;
    }
    used[found] = true;
    phi.push_back(found);
  }
  if (phi.size() != deltas.size()) {
    diag += "sub and amb have different numbers of simples; ";
    return std::nullopt;
  }
  return phi;
}

}  // namespace

BorelReport verify_exact_borel(const AlgebraPtr& a, const SimpleOrder& order, const SubalgebraEmbedding& emb,
                               const BorelOptions& opt) {
  BorelReport rep;
  std::string diag;
  const AlgebraPtr& b = emb.sub;
  emb.verify();
  if (!b->is_basic()) diag += "sub is not basic; ";
  rep.exact = is_induction_exact(emb);
  if (!rep.exact) diag += "induction is not exact; ";
  auto deltas = standard_modules(a, order);
  auto phi = match_standards(emb, deltas, diag);
  rep.simples_to_standards = phi.has_value();
  if (phi) rep.phi = *phi;
  // Ext quiver of the sub against the transported order
  auto simples = simple_modules(b);
  const int k = static_cast<int>(simples.size());
  rep.directed = true;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (ext_space(simples[i], simples[j], 1).dim == 0) continue;
      if (i == j || !phi || !order.less((*phi)[i], (*phi)[j])) {
        rep.directed = false;
        diag += "Ext^1(L_" + std::to_string(i + 1) + ", L_" + std::to_string(j + 1) + ") against the order; ";
      }
    }
  if (auto c = find_normal_complement(emb, opt.normal_attempts, opt.seed)) {
    rep.normal = Decision::yes;
    rep.normal_complement = *c;
  } else {
    diag += "no splitting found by the bounded search; ";
  }
  rep.strong = is_strong(emb);
  if (b->is_basic()) {
    rep.regularity = regularity_ranks(emb, opt.regular_up_to);
    bool iso = true;
    for (const auto& r : rep.regularity)
      if (r.rank != r.dim_sub || r.rank != r.dim_amb) {
        iso = false;
        diag += "Ext^" + std::to_string(r.degree) + " comparison has rank " + std::to_string(r.rank) + " between dims " +
                std::to_string(r.dim_sub) + " and " + std::to_string(r.dim_amb) + "; ";
      }
    rep.regular = iso && rep.exact && rep.simples_to_standards && rep.normal == Decision::yes;
  }
  rep.diagnostics = diag;
  return rep;
}

LemmaReport check_strong_lemmas(const AlgebraPtr& a, const SimpleOrder& order, const SubalgebraEmbedding& emb,
                                std::uint64_t seed) {
  LemmaReport rep;
  std::string diag;
  rep.strong = is_strong(emb);
  const FinDimAlgebra& amb = *a;
  if (rep.strong) {
    Echelon rad(amb.dim());
    for (const auto& v : amb.radical()) rad.insert(v);
    for (const auto& r : emb.sub->radical())
      for (int k = 0; k < amb.dim(); ++k)
        if (!rad.contains(amb.mul(amb.basis_vec(k), emb.image(r)))) rep.radical_inclusion = false;
    if (!rep.radical_inclusion) diag += "A rad(B) not inside rad(A); ";
  }
  auto phi = match_standards(emb, standard_modules(a, order), diag);
  if (!phi) {
    rep.top_inequality = false;
    rep.diagnostics = diag;
    return rep;
  }
  std::vector<Representation> samples = simple_modules(emb.sub);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int i = 0; i < emb.sub->num_idempotents(); ++i) {
    Representation p = projective_module(emb.sub, emb.sub->idempotent(i));
    samples.push_back(p);
    auto rad = module_radical(p);
    for (int t = 0; t < 3 && !rad.empty(); ++t) {
      Vec v = zero_vec(p.dim());
      for (const auto& r : rad) axpy(v, Scalar(coef(rng)), r);
      if (is_zero(v)) continue;
      samples.push_back(quotient(p, generated_submodule(p, {v})).mod);
    }
  }
  for (const auto& m : samples) {
    auto tb = top_multiplicities(m);
    auto ta = top_multiplicities(induce(emb, m).module);
    for (size_t i = 0; i < tb.size(); ++i) {
      if (ta[(*phi)[i]] < tb[i]) rep.top_inequality = false;
      if (ta[(*phi)[i]] != tb[i]) rep.top_equality = false;
    }
    ++rep.samples;
  }
  if (!rep.top_inequality) diag += "top multiplicity inequality fails; ";
  if (rep.strong && !rep.top_equality) diag += "top multiplicities differ for a strong subalgebra; ";
  rep.diagnostics = diag;
  return rep;
}

}  // namespace qha

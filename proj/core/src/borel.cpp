#include "qha/borel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "qha/errors.hpp"

namespace qha {

ExtModel ext_model(const std::vector<Representation>& modules, int max_len, int cap, bool positive_only) {
  ExtModel e;
  e.modules = modules;
  for (const auto& m : modules) e.resolutions.push_back(minimal_projective_resolution(m, max_len));
  e.dg = dg_endomorphisms(e.resolutions, cap);
  e.transfer = homotopy_transfer(e.dg.dga, positive_only);
  return e;
}

ReconstructedAlgebra reconstruct(const AInftyAlgebra& model, int max_length) {
  if (!model.is_minimal()) throw ScopeError("reconstruct needs a minimal model");
  if (!is_coconnected(model)) throw ScopeError("reconstruct needs a coconnected model");
  const GradedBasis& gb = model.basis();
  ReconstructedAlgebra rec;
  rec.quiver.n = gb.nobj;
  rec.arrow_of.assign(static_cast<size_t>(gb.size()), -1);
  std::map<std::pair<int, int>, int> seen;
  for (int k = 0; k < gb.size(); ++k) {
    if (gb.deg[k] != 1) continue;
    const int s = gb.src[k], t = gb.tgt[k];
    int mult = ++seen[{s, t}];
    std::string name = "(" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
    if (mult > 1) name += "_" + std::to_string(mult);
    rec.arrow_of[k] = static_cast<int>(rec.quiver.arrows.size());
    rec.model_index.push_back(k);
    rec.quiver.arrows.push_back({s, t, name});
  }
  std::map<int, Relation> rels;
  auto deg1 = [&](int x) { return gb.deg[x] == 1; };
  for (int n = 2; n <= model.cap(); ++n)
    for (const auto& xs : composable_tuples(gb, n, deg1)) {
      SVec v = model.m(xs);
      if (v.empty()) continue;
      Path p;
      for (int x : xs) p.arrows.push_back(rec.arrow_of[x]);
      for (const auto& [z, c] : v.e)
        if (gb.deg[z] == 2) rels[z].push_back({c, p});
    }
  for (auto& [z, r] : rels) rec.relations.push_back(std::move(r));
  try {
    rec.alg = std::make_shared<FinDimAlgebra>(build_path_algebra(rec.quiver, rec.relations, max_length));
  } catch (const ScopeError& e) {
    throw ScopeError(std::string("reconstructed algebra is not finite-dimensional: ") + e.what());
  }
  const auto& paths = rec.alg->presentation()->basis_paths;
  for (size_t a = 0; a < rec.quiver.arrows.size(); ++a) {
    int found = -1;
    for (size_t b = 0; b < paths.size(); ++b)
      if (paths[b].arrows == std::vector<int>{static_cast<int>(a)}) found = static_cast<int>(b);
    if (found < 0) throw VerificationError("arrow " + rec.quiver.arrows[a].name + " vanishes in the quotient");
    rec.arrow_basis.push_back(found);
  }
  return rec;
}

Representation path_module(const AlgebraPtr& alg, const std::vector<int>& dims, const std::vector<Matrix>& arrows) {
  if (!alg->presentation()) throw ScopeError("path_module needs a presented algebra");
  const QuiverPresentation& pr = *alg->presentation();
  int total = 0;
  std::vector<int> off;
  for (int d : dims) {
    off.push_back(total);
    total += d;
  }
  std::vector<Matrix> act;
  for (const auto& p : pr.basis_paths) {
    if (p.arrows.empty()) {
      Matrix e(total, total);
      for (int k = 0; k < dims[p.vertex]; ++k) e(off[p.vertex] + k, off[p.vertex] + k) = Scalar(1);
      act.push_back(std::move(e));
      continue;
    }
    Matrix m = arrows[p.arrows[0]];
    for (size_t k = 1; k < p.arrows.size(); ++k) m = m * arrows[p.arrows[k]];
    act.push_back(std::move(m));
  }
  Representation r(alg, total, std::move(act));
  r.verify();
  return r;
}

Representation keller_module(const ReconstructedAlgebra& rec, const TwistedModule& t) {
  if (!is_maurer_cartan(t)) throw VerificationError("twist does not satisfy the Maurer-Cartan equation");
  std::vector<Matrix> arrows;
  for (int k : rec.model_index) {
    auto it = t.w.find(k);
    arrows.push_back(it == t.w.end() ? Matrix(t.total(), t.total()) : it->second);
  }
  return path_module(rec.alg, t.dims, arrows);
}

ModuleTwist twist_from_module(const AInftyPtr& model, const ReconstructedAlgebra& rec, const Representation& m) {
  const FinDimAlgebra& b = *rec.alg;
  std::vector<int> dims;
  std::vector<Vec> cols;
  for (int v = 0; v < b.num_idempotents(); ++v) {
    Matrix e = m.act(b.idempotent(v));
    std::vector<Vec> c;
    for (int j = 0; j < e.cols(); ++j) c.push_back(e.col(j));
    auto basis = span_basis(c, m.dim());
    dims.push_back(static_cast<int>(basis.size()));
    cols.insert(cols.end(), basis.begin(), basis.end());
  }
  ModuleTwist out{zero_twist(model, dims), Matrix::from_cols(cols, m.dim()), {}};
  auto inv = inverse(out.basis);
  if (!inv) throw VerificationError("vertex spaces do not span the module");
  out.inverse = *inv;
  for (size_t a = 0; a < rec.model_index.size(); ++a) {
    Matrix phi = out.inverse * m.action(rec.arrow_basis[a]) * out.basis;
    if (!phi.is_zero()) out.twist.add(rec.model_index[a], phi);
  }
  if (!is_maurer_cartan(out.twist)) throw VerificationError("module twist fails the Maurer-Cartan equation");
  return out;
}

int FenwickData::find(const std::vector<int>& alpha) const {
  for (size_t k = 0; k < index_set.size(); ++k)
    if (index_set[k] == alpha) return static_cast<int>(k);
  return -1;
}

std::string FenwickData::label(const std::vector<int>& alpha) {
  std::string s;
  for (int x : alpha) s += x ? '1' : '0';
  return s;
}

FenwickData fenwick_projectives(int n) {
  if (n < 1) throw ScopeError("fenwick data needs n >= 1");
  FenwickData f;
  f.n = n;
  f.by_start.assign(static_cast<size_t>(n), {});
  f.q.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int mask = (1 << (n - 1)) - 1; mask >= 0; --mask) {
    std::vector<int> alpha(static_cast<size_t>(n), 0);
    for (int k = 0; k < n - 1; ++k) alpha[k] = (mask >> (n - 2 - k)) & 1;
    alpha[n - 1] = 1;
    int s = 0;
    while (!alpha[s]) ++s;
    int last_zero = 0;
    for (int k = 0; k < n; ++k)
      if (!alpha[k]) last_zero = k + 1;
    int zeros = 0;
    for (int k = s; k < n; ++k)
      if (!alpha[k]) ++zeros;
    const int idx = static_cast<int>(f.index_set.size());
    f.index_set.push_back(alpha);
    f.start.push_back(s + 1);
    f.j.push_back(last_zero + 1);
    f.zeros.push_back(zeros);
    f.by_start[s].push_back(idx);
    ++f.q[s][last_zero];
  }
  return f;
}

namespace {

Vec coords_or_throw(const Echelon& e, const Vec& v, const char* what) {
  auto c = e.coordinates(v);
  if (!c) throw VerificationError(what);
  return *c;
}

}  // namespace

BorelSynthesis synthesize_borel_pair(const AlgebraPtr& a, const SimpleOrder& order, int cap, const BorelOptions& opt) {
  BorelSynthesis s;
  s.a = a;
  s.order_a = order;
  auto qh = check_quasi_hereditary(a, order);
  if (!qh.ok) throw ScopeError("input is not quasi-hereditary: " + qh.diagnostics);
  s.deltas = standard_modules(a, order);
  s.ext = ext_model(s.deltas, 2 * a->num_simples() + 2, cap, true);
  s.model = s.ext.transfer.model;
  s.b = reconstruct(*s.model);
  const AlgebraPtr& b = s.b.alg;
  const int nv = b->num_idempotents();

  std::vector<Vec> eps;
  std::vector<std::string> names;
  for (int i = 0; i < nv; ++i) {
    BorelSynthesis::Vertex v;
    v.pb_basis = projective_basis(*b, b->idempotent(i));
    Representation pb = projective_module(b, b->idempotent(i));
    v.twist = twist_from_module(s.model, s.b, pb);
    TwistedModule pushed = twmod_apply(*s.ext.transfer.inclusion, v.twist.twist);
    v.real = realize_full(s.ext.dg, pushed);
    v.cover = projective_cover(v.real.module);
    auto ci = inverse(v.cover.surjection);
    if (!ci) throw VerificationError("Q_" + std::to_string(i + 1) + " is not projective");
    v.cover_inverse = *ci;
    v.first_summand = static_cast<int>(eps.size());
    std::vector<int> classes;
    for (size_t k = 0; k < v.cover.summands.size(); ++k) {
      const int idem = v.cover.summands[k];
      eps.push_back(a->idempotent(idem));
      classes.push_back(a->simple_class()[idem]);
      names.push_back(std::to_string(i + 1) + static_cast<char>('a' + k));
      s.summand_vertex.push_back(i);
      BorelSynthesis::Summand sm;
      sm.basis = projective_basis(*a, eps.back());
      Echelon e(a->dim());
      for (const auto& x : sm.basis) e.insert(x);
      sm.eps_coords = coords_or_throw(e, eps.back(), "summand idempotent outside its projective");
      s.summands.push_back(std::move(sm));
    }
    s.q.push_back(v.real.module);
    s.q_classes.push_back(classes);
    s.vertices.push_back(std::move(v));
  }
  s.r = projective_endomorphisms(a, eps, names);
  std::vector<Vec> cols;
  for (int k = 0; k < b->dim(); ++k) cols.push_back(induced_endomorphism(s, b->basis_vec(k)));
  s.iota = SubalgebraEmbedding{b, s.r.alg, Matrix::from_cols(cols, s.r.alg->dim())};
  s.iota.verify();

  const FinDimAlgebra& r = *s.r.alg;
  std::vector<int> f(static_cast<size_t>(r.num_simples()), -1);
  for (int t = 0; t < r.num_idempotents(); ++t) {
    const auto& v = s.vertices[s.summand_vertex[t]];
    const int ac = a->simple_class()[v.cover.summands[t - v.first_summand]];
    int& slot = f[r.simple_class()[t]];
    if (slot >= 0 && slot != ac) throw VerificationError("summand classes of R do not match simples of A");
    slot = ac;
  }
  s.order_r = order.pullback(f);
  s.report = verify_exact_borel(s.r.alg, s.order_r, s.iota, opt);
  const BorelReport& rep = s.report;
  if (!(rep.exact && rep.simples_to_standards && rep.directed && rep.normal == Decision::yes && rep.regular))
    throw VerificationError("synthesized pair fails verification: " + rep.diagnostics);
  return s;
}

Vec induced_endomorphism(const BorelSynthesis& s, const Vec& x) {
  const FinDimAlgebra& b = *s.b.alg;
  const FinDimAlgebra& a = *s.a;
  const int nv = b.num_idempotents();
  Vec out = zero_vec(s.r.alg->dim());
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      Vec c = b.mul(b.mul(b.idempotent(i), x), b.idempotent(j));
      if (is_zero(c)) continue;
      const auto& vi = s.vertices[i];
      const auto& vj = s.vertices[j];
      Echelon ej(b.dim());
      for (const auto& v : vj.pb_basis) ej.insert(v);
      Matrix f(static_cast<int>(vj.pb_basis.size()), static_cast<int>(vi.pb_basis.size()));
      for (size_t k = 0; k < vi.pb_basis.size(); ++k) {
        Vec w = coords_or_throw(ej, b.mul(vi.pb_basis[k], c), "right multiplication leaves the projective");
        for (size_t r = 0; r < w.size(); ++r) f(static_cast<int>(r), static_cast<int>(k)) = w[r];
      }
      Matrix tf = vj.twist.inverse * f * vi.twist.basis;
      Matrix qmap = realize_map(s.ext.dg, vi.real, vj.real, tf);
      Matrix g = vj.cover_inverse * qmap * vi.cover.surjection;
      int ro = 0;
      for (size_t ks = 0; ks < vi.cover.summands.size(); ++ks) {
        const int S = vi.first_summand + static_cast<int>(ks);
        const auto& ss = s.summands[S];
        int co = 0;
        for (size_t kt = 0; kt < vj.cover.summands.size(); ++kt) {
          const int T = vj.first_summand + static_cast<int>(kt);
          const auto& st = s.summands[T];
          const int ds = static_cast<int>(ss.basis.size()), dt = static_cast<int>(st.basis.size());
          Vec img = g.block(co, ro, dt, ds).apply(ss.eps_coords);
          Vec ca = zero_vec(a.dim());
          for (int k = 0; k < dt; ++k)
            if (!img[k].is_zero()) axpy(ca, img[k], st.basis[k]);
          if (!is_zero(ca)) out = out + s.r.element(S, T, ca);
          co += dt;
        }
        ro += static_cast<int>(ss.basis.size());
      }
    }
  return out;
}

// ---- conjugation ----

namespace {

std::optional<Vec> invertible_in_span(const FinDimAlgebra& a, const std::vector<Vec>& span, std::mt19937_64& rng,
                                      const std::function<bool(const Vec&)>& accept) {
  if (span.empty()) return std::nullopt;
  const int draws = Field::current().is_rational() ? 64 : 256;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < draws; ++t) {
    Vec u = zero_vec(a.dim());
    for (const auto& v : span) axpy(u, Scalar(t == 0 ? 1 : coef(rng)), v);
    if (is_zero(u) || !is_invertible(a, u)) continue;
    if (accept(u)) return u;
  }
  return std::nullopt;
}

}  // namespace

bool verify_conjugation(const SubalgebraEmbedding& b, const SubalgebraEmbedding& b2, const Vec& u) {
  const FinDimAlgebra& a = *b.amb;
  auto ui = inverse_element(a, u);
  if (!ui) return false;
  std::vector<Vec> imgs;
  for (int k = 0; k < b.sub->dim(); ++k) imgs.push_back(a.mul(a.mul(u, b.image_basis(k)), *ui));
  return same_span(imgs, b2.image_span(), a.dim());
}

SubalgebraEmbedding conjugate_embedding(const SubalgebraEmbedding& emb, const Vec& u) {
  const FinDimAlgebra& a = *emb.amb;
  auto ui = inverse_element(a, u);
  if (!ui) throw ScopeError("conjugating element is not invertible");
  std::vector<Vec> cols;
  for (int k = 0; k < emb.sub->dim(); ++k) cols.push_back(a.mul(a.mul(u, emb.image_basis(k)), *ui));
  return SubalgebraEmbedding{emb.sub, emb.amb, Matrix::from_cols(cols, a.dim())};
}

Vec random_unit(const FinDimAlgebra& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 1000; ++t) {
    Vec u = zero_vec(a.dim());
    for (int k = 0; k < a.dim(); ++k) u[k] = Scalar(coef(rng));
    if (is_invertible(a, u)) return u;
  }
  throw ScopeError("no random unit found");
}

ConjugationResult conjugate_subalgebras(const SubalgebraEmbedding& b, const SubalgebraEmbedding& b2,
                                        std::uint64_t seed, int max_candidates) {
  ConjugationResult res;
  if (b.amb.get() != b2.amb.get() && b.amb->dim() != b2.amb->dim())
    throw ScopeError("subalgebras of different algebras");
  if (!b.sub->is_basic() || !b2.sub->is_basic()) throw ScopeError("conjugacy search needs basic subalgebras");
  const FinDimAlgebra& a = *b.amb;
  const FinDimAlgebra& s1 = *b.sub;
  const FinDimAlgebra& s2 = *b2.sub;
  const int n = a.dim();
  if (s1.dim() != s2.dim() || s1.num_idempotents() != s2.num_idempotents()) {
    res.decision = Decision::no;
    res.note = "subalgebras have different dimensions or vertex counts";
    return res;
  }
  // vertex matching through the induced simples
  auto l1 = simple_modules(b.sub), l2 = simple_modules(b2.sub);
  std::vector<Representation> ind2;
  for (const auto& l : l2) ind2.push_back(induce(b2, l).module);
  std::vector<bool> used(l2.size(), false);
  for (size_t i = 0; i < l1.size(); ++i) {
    Representation m = induce(b, l1[i]).module;
    int found = -1;
    for (size_t j = 0; j < l2.size() && found < 0; ++j)
      if (!used[j] && ind2[j].dim() == m.dim() && module_isomorphic(m, ind2[j], seed).decision == Decision::yes)
        found = static_cast<int>(j);
    if (found < 0) {
      res.decision = Decision::no;
      res.note = "induced simple " + std::to_string(i + 1) + " has no partner";
      return res;
    }
    used[found] = true;
    // simple classes of a basic algebra follow the idempotent order
    res.vertex_match.push_back(found);
  }

  auto g1 = arrow_generators(s1), g2 = arrow_generators(s2);
  const int m = s1.num_idempotents();
  std::vector<int> target(g1.size(), -1);
  {
    std::vector<bool> taken(g2.size(), false);
    for (size_t k = 0; k < g1.size(); ++k) {
      for (size_t l = 0; l < g2.size() && target[k] < 0; ++l)
        if (!taken[l] && g2[l].src == res.vertex_match[g1[k].src] && g2[l].tgt == res.vertex_match[g1[k].tgt]) {
          target[k] = static_cast<int>(l);
          taken[l] = true;
        }
      if (target[k] < 0) {
        res.decision = Decision::no;
        res.note = "arrow spaces of the subalgebras differ";
        return res;
      }
    }
    if (g1.size() != g2.size()) {
      res.decision = Decision::no;
      res.note = "arrow spaces of the subalgebras differ";
      return res;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const int na = static_cast<int>(g1.size());
  std::vector<std::vector<Scalar>> scalings;
  scalings.push_back(std::vector<Scalar>(static_cast<size_t>(na), Scalar(1)));
  if (na <= 6)
    for (int mask = 1; mask < (1 << na) && static_cast<int>(scalings.size()) < max_candidates; ++mask) {
      std::vector<Scalar> sc;
      for (int k = 0; k < na; ++k) sc.push_back(Scalar((mask >> k) & 1 ? -1 : 1));
      scalings.push_back(std::move(sc));
    }
  while (static_cast<int>(scalings.size()) < max_candidates) {
    std::vector<Scalar> sc;
    for (int k = 0; k < na; ++k) {
      int c = 0;
      while (c == 0) c = coef(rng);
      sc.push_back(Scalar(c));
    }
    scalings.push_back(std::move(sc));
  }
  for (const auto& sc : scalings) {
    ++res.candidates;
    std::vector<Vec> gens;
    for (int i = 0; i < m; ++i) gens.push_back(s2.idempotent(res.vertex_match[i]));
    for (int k = 0; k < na; ++k) gens.push_back(scaled(g2[target[k]].v, sc[k]));
    auto phi = extend_to_isomorphism(s1, g1, s2, gens);
    if (!phi) continue;
    // u iota(x) = iota'(phi(x)) u
    Matrix sys(0, n);
    for (int k = 0; k < s1.dim(); ++k) {
      Matrix blk = a.right_mult(b.image_basis(k)) - a.left_mult(b2.image(phi->col(k)));
      sys = vstack(sys, blk);
    }
    auto ker = kernel_basis(sys);
    auto u = invertible_in_span(a, ker, rng, [&](const Vec& x) { return verify_conjugation(b, b2, x); });
    if (!u) continue;
    res.decision = Decision::yes;
    res.unit = *u;
    res.phi = *phi;
    res.note = "verified";
    return res;
  }
  res.note = "no witness found (bounded search)";
  return res;
}

DiagramReport check_diagram_commutes(const SubalgebraEmbedding& b, const SubalgebraEmbedding& b2, const Vec& u,
                                     int min_twists) {
  DiagramReport rep;
  std::string diag;
  if (!verify_conjugation(b, b2, u)) {
    rep.diagnostics = "element does not conjugate the subalgebras";
    return rep;
  }
  const FinDimAlgebra& a = *b.amb;
  auto ui = *inverse_element(a, u);
  Matrix phi(b2.sub->dim(), b.sub->dim());
  for (int k = 0; k < b.sub->dim(); ++k) {
    auto c = solve(b2.map, a.mul(a.mul(u, b.image_basis(k)), ui));
    if (!c) throw VerificationError("conjugate lies outside the second subalgebra");
    for (int r = 0; r < phi.rows(); ++r) phi(r, k) = (*c)[r];
  }
  std::vector<Representation> samples = simple_modules(b.sub);
  rep.simples = static_cast<int>(samples.size());
  ExtModel ext = ext_model(simple_modules(b.sub), 2 * b.sub->num_idempotents() + 2, 4, true);
  AInftyPtr model = ext.transfer.model;
  const GradedBasis& gb = model->basis();
  std::vector<int> deg1;
  for (int k = 0; k < gb.size(); ++k)
    if (gb.deg[k] == 1) deg1.push_back(k);
  for (int c = 1; !deg1.empty() && rep.twists < min_twists; ++c)
    for (int xi : deg1) {
      std::vector<int> dims(static_cast<size_t>(gb.nobj), 0);
      ++dims[gb.src[xi]];
      ++dims[gb.tgt[xi]];
      TwistedModule t = zero_twist(model, dims);
      Matrix one(1, 1);
      one(0, 0) = Scalar(c);
      t.add(xi, t.place(gb.src[xi], gb.tgt[xi], one));
      samples.push_back(realize(ext.dg, twmod_apply(*ext.transfer.inclusion, t)));
      ++rep.twists;
    }
  for (size_t k = 0; k < samples.size(); ++k) {
    const Representation& m = samples[k];
    Representation lhs = induce(b, m).module;
    Representation rhs = induce(b2, transport_module(b2.sub, phi, m)).module;
    auto iso = module_isomorphic(lhs, rhs);
    bool ok = iso.decision == Decision::yes && iso.witness && is_module_map(lhs, rhs, *iso.witness) &&
              rank(*iso.witness) == lhs.dim();
    if (ok) {
      ++rep.passed;
      rep.witnesses.push_back(*iso.witness);
    } else {
      diag += "sample " + std::to_string(k + 1) + " does not commute; ";
    }
  }
  rep.ok = rep.passed == static_cast<int>(samples.size());
  rep.diagnostics = diag;
  return rep;
}

}  // namespace qha

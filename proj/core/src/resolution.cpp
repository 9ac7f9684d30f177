#include "qha/resolution.hpp"

#include <map>
#include <mutex>

#include "qha/errors.hpp"

namespace qha {

namespace {

struct ProjBasis {
  std::vector<Vec> basis;
  Echelon coord{0};
};

// Projective bases are requested many times for the same idempotents.
const ProjBasis& proj_basis(const AlgebraPtr& a, const Vec& eps) {
  static std::mutex mu;
  static std::map<std::pair<const FinDimAlgebra*, std::string>, std::pair<AlgebraPtr, std::unique_ptr<ProjBasis>>> cache;
  std::string key;
  for (const auto& x : eps) key += x.str() + ",";
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{a.get(), key}];
  if (!slot.second) {
    auto pb = std::make_unique<ProjBasis>();
    pb->basis = projective_basis(*a, eps);
    pb->coord = Echelon(a->dim());
    for (const auto& v : pb->basis) pb->coord.insert(v);
    slot = {a, std::move(pb)};
  }
  return *slot.second;
}

Vec coords(const Echelon& e, const Vec& v) {
  auto c = e.coordinates(v);
  if (!c) throw VerificationError("element outside the expected corner");
  return *c;
}

std::vector<Vec> column_basis(const Matrix& m) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return span_basis(cols, m.rows());
}

}  // namespace

std::vector<int> ProjComplex::offsets(int q) const {
  std::vector<int> off{0};
  for (int s = 0; s < summands(q); ++s)
    off.push_back(off.back() + static_cast<int>(proj_basis(alg, terms[q][s]).basis.size()));
  return off;
}

int ProjComplex::term_dim(int q) const { return offsets(q).back(); }

Representation ProjComplex::term_module(int q) const {
  std::vector<Representation> parts;
  for (int s = 0; s < summands(q); ++s) parts.push_back(projective_module(alg, terms[q][s]));
  return parts.empty() ? zero_module(alg) : direct_sum(parts);
}

Matrix ProjComplex::element_matrix(int q, int s, int r, int t, const Vec& c) const {
  const ProjBasis& src = proj_basis(alg, terms[q][s]);
  const ProjBasis& dst = proj_basis(alg, terms[r][t]);
  Matrix m(static_cast<int>(dst.basis.size()), static_cast<int>(src.basis.size()));
  if (is_zero(c)) return m;
  for (size_t j = 0; j < src.basis.size(); ++j) {
    Vec v = alg->mul(src.basis[j], c);
    if (is_zero(v)) continue;
    Vec k = coords(dst.coord, v);
    for (size_t i = 0; i < k.size(); ++i) m(static_cast<int>(i), static_cast<int>(j)) = k[i];
  }
  return m;
}

Matrix ProjComplex::diff_matrix(int q) const {
  if (q < 1 || q > length()) return Matrix(term_dim(q - 1), term_dim(q));
  auto so = offsets(q), to = offsets(q - 1);
  Matrix m(to.back(), so.back());
  for (int s = 0; s < summands(q); ++s)
    for (int t = 0; t < summands(q - 1); ++t) m.set_block(to[t], so[s], element_matrix(q, s, q - 1, t, diffs[q][s][t]));
  return m;
}

Matrix ProjComplex::augmentation_matrix() const {
  std::vector<Vec> cols;
  for (int s = 0; s < summands(0); ++s)
    for (const auto& x : proj_basis(alg, terms[0][s]).basis) cols.push_back(augmented.act(x, augmentation[s]));
  if (cols.empty()) return Matrix(augmented.dim(), 0);
  return Matrix::from_cols(cols, augmented.dim());
}

ProjComplex minimal_projective_resolution(const Representation& m, int max_len, bool allow_truncation) {
  ProjComplex pc;
  pc.alg = m.algebra();
  pc.augmented = m;
  ProjectiveCover cover = projective_cover(m);
  std::vector<Vec> t0;
  for (int i : cover.summands) t0.push_back(pc.alg->idempotent(i));
  pc.terms.push_back(t0);
  pc.diffs.emplace_back();
  pc.augmentation = cover.generators;
  Matrix prev = cover.surjection;
  Representation p = cover.module;
  for (int q = 0;; ++q) {
    auto ker = kernel_basis(prev);
    if (ker.empty()) break;
    if (q + 1 > max_len) {
      if (allow_truncation) break;
      throw ScopeError("resolution longer than cap " + std::to_string(max_len));
    }
    Subquotient ks = submodule(p, ker);
    ProjectiveCover kc = projective_cover(ks.mod);
    auto off = pc.offsets(q);
    std::vector<Vec> terms;
    std::vector<std::vector<Vec>> elems;
    for (size_t s = 0; s < kc.summands.size(); ++s) {
      terms.push_back(pc.alg->idempotent(kc.summands[s]));
      Vec k = ks.map.apply(kc.generators[s]);
      std::vector<Vec> row;
      for (int t = 0; t < pc.summands(q); ++t) {
        const auto& basis = proj_basis(pc.alg, pc.terms[q][t]).basis;
        Vec c = zero_vec(pc.alg->dim());
        for (size_t j = 0; j < basis.size(); ++j)
          if (!k[off[t] + j].is_zero()) axpy(c, k[off[t] + j], basis[j]);
        row.push_back(std::move(c));
      }
      elems.push_back(std::move(row));
    }
    pc.terms.push_back(std::move(terms));
    pc.diffs.push_back(std::move(elems));
    p = pc.term_module(q + 1);
    prev = pc.diff_matrix(q + 1);
  }
  return pc;
}

ProjComplex induce_complex(const SubalgebraEmbedding& emb, const ProjComplex& p) {
  ProjComplex out;
  out.alg = emb.amb;
  for (const auto& t : p.terms) {
    std::vector<Vec> tt;
    for (const auto& e : t) tt.push_back(emb.image(e));
    out.terms.push_back(std::move(tt));
  }
  for (const auto& d : p.diffs) {
    std::vector<std::vector<Vec>> dd;
    for (const auto& row : d) {
      std::vector<Vec> r;
      for (const auto& c : row) r.push_back(emb.image(c));
      dd.push_back(std::move(r));
    }
    out.diffs.push_back(std::move(dd));
  }
  return out;
}

int homology_dim(const ProjComplex& p, int q) {
  int dim = p.term_dim(q);
  int ker = q == 0 ? dim : dim - rank(p.diff_matrix(q));
  int im = q + 1 <= p.length() ? rank(p.diff_matrix(q + 1)) : 0;
  return ker - im;
}

ExtSpace ext_space(const Representation& m, const Representation& n, int k) {
  ProjComplex pc = minimal_projective_resolution(m, k + 1, true);
  const int nd = n.dim();
  // Cochains Hom(P^{-q}, N) = sum_s eps_s N, as concatenated vectors of N.
  auto domain = [&](int q) {
    std::vector<Vec> basis;
    const int ns = pc.summands(q);
    for (int s = 0; s < ns; ++s)
      for (const auto& v : column_basis(n.act(pc.terms[q][s]))) {
        if (is_zero(v)) continue;
        Vec big = zero_vec(ns * nd);
        for (int i = 0; i < nd; ++i) big[s * nd + i] = v[i];
        basis.push_back(std::move(big));
      }
    return basis;
  };
  auto delta = [&](int q) {
    const int ns = pc.summands(q), nt = pc.summands(q + 1);
    Matrix d(nt * nd, ns * nd);
    for (int s2 = 0; s2 < nt; ++s2)
      for (int t = 0; t < ns; ++t) d.set_block(s2 * nd, t * nd, n.act(pc.diffs[q + 1][s2][t]));
    return d;
  };
  ExtSpace out;
  out.degree = k;
  auto dk = domain(k);
  if (dk.empty()) return out;
  Matrix basis_k = Matrix::from_cols(dk, pc.summands(k) * nd);
  std::vector<Vec> cocycles;
  if (k + 1 <= pc.length()) {
    for (const auto& c : kernel_basis(delta(k) * basis_k)) cocycles.push_back(basis_k.apply(c));
  } else {
    cocycles = dk;
  }
  std::vector<Vec> cobound;
  if (k >= 1) {
    auto dk1 = domain(k - 1);
    if (!dk1.empty()) {
      Matrix img = delta(k - 1) * Matrix::from_cols(dk1, pc.summands(k - 1) * nd);
      cobound = column_basis(img);
    }
  }
  out.cocycles = quotient_complement(cocycles, cobound, pc.summands(k) * nd);
  out.dim = static_cast<int>(out.cocycles.size());
  return out;
}

int DgEndData::block_index(int a, int qa, int s, int b, int qb, int t) const {
  auto it = lookup.find({a, qa, s, b, qb, t});
  return it == lookup.end() ? -1 : it->second;
}

Matrix DgEndData::element_matrix(int x) const {
  const auto& [bi, k] = basis[x];
  const Block& bl = blocks[bi];
  const ProjComplex& pa = cx[bl.a];
  const ProjComplex& pb = cx[bl.b];
  Matrix m(pb.term_dim(bl.qb), pa.term_dim(bl.qa));
  auto so = pa.offsets(bl.qa), to = pb.offsets(bl.qb);
  const auto& src = proj_basis(alg, pa.terms[bl.qa][bl.s]);
  const auto& dst = proj_basis(alg, pb.terms[bl.qb][bl.t]);
  for (size_t j = 0; j < src.basis.size(); ++j) {
    Vec v = alg->mul(src.basis[j], bl.corner[k]);
    if (is_zero(v)) continue;
    Vec c = coords(dst.coord, v);
    for (size_t i = 0; i < c.size(); ++i) m(to[bl.t] + static_cast<int>(i), so[bl.s] + static_cast<int>(j)) = c[i];
  }
  return m;
}

SVec DgEndData::from_element(int block, const Vec& c) const {
  SVec out;
  if (is_zero(c)) return out;
  Vec k = coords(coord[block], c);
  for (size_t i = 0; i < k.size(); ++i)
    if (!k[i].is_zero()) out.add(first[block] + static_cast<int>(i), k[i]);
  return out;
}

SVec DgEndData::from_components(int a, int qa, int b, int qb, const std::vector<std::vector<Vec>>& c) const {
  SVec out;
  for (size_t s = 0; s < c.size(); ++s)
    for (size_t t = 0; t < c[s].size(); ++t) {
      if (is_zero(c[s][t])) continue;
      int bi = block_index(a, qa, static_cast<int>(s), b, qb, static_cast<int>(t));
      if (bi < 0) throw VerificationError("component outside every block");
      out.add(from_element(bi, c[s][t]), Scalar(1));
    }
  out.canonicalize();
  return out;
}

Matrix DgEndData::as_matrix(const SVec& x, int a, int qa, int b, int qb) const {
  Matrix m(cx[b].term_dim(qb), cx[a].term_dim(qa));
  for (const auto& [i, c] : x.e) {
    const Block& bl = blocks[basis[i].first];
    if (bl.a != a || bl.qa != qa || bl.b != b || bl.qb != qb) continue;
    m = m + element_matrix(i).scaled(c);
  }
  return m;
}

DgEnd dg_endomorphisms(std::vector<ProjComplex> cx, int cap) {
  auto data = std::make_shared<DgEndData>();
  DgEndData& D = *data;
  D.alg = cx.front().alg;
  D.cx = std::move(cx);
  const int r = static_cast<int>(D.cx.size());
  GradedBasis gb;
  gb.nobj = r;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int qa = 0; qa <= D.cx[a].length(); ++qa)
        for (int qb = 0; qb <= D.cx[b].length(); ++qb)
          for (int s = 0; s < D.cx[a].summands(qa); ++s)
            for (int t = 0; t < D.cx[b].summands(qb); ++t) {
              const Vec& es = D.cx[a].terms[qa][s];
              const Vec& et = D.cx[b].terms[qb][t];
              auto c = D.alg->corner(es, et);
              if (c.empty()) continue;
              if (a == b && qa == qb && s == t) {
                Echelon e(D.alg->dim());
                std::vector<Vec> ordered{es};
                e.insert(es);
                for (auto& v : c)
                  if (e.insert(v)) ordered.push_back(v);
                c = ordered;
              }
              const int bi = static_cast<int>(D.blocks.size());
              D.lookup[{a, qa, s, b, qb, t}] = bi;
              D.first.push_back(static_cast<int>(D.basis.size()));
              Echelon e(D.alg->dim());
              for (size_t k = 0; k < c.size(); ++k) {
                e.insert(c[k]);
                D.basis.emplace_back(bi, static_cast<int>(k));
                gb.add(qa - qb, a, b,
                       std::to_string(a + 1) + ":" + std::to_string(qa) + "." + std::to_string(s + 1) + ">" +
                           std::to_string(b + 1) + ":" + std::to_string(qb) + "." + std::to_string(t + 1) + "[" +
                           D.alg->element_str(c[k]) + "]");
              }
              D.coord.push_back(std::move(e));
              D.blocks.push_back({a, qa, s, b, qb, t, std::move(c)});
            }
  std::vector<Vec> units;
  for (int a = 0; a < r; ++a) {
    Vec u = zero_vec(gb.size());
    for (int q = 0; q <= D.cx[a].length(); ++q)
      for (int s = 0; s < D.cx[a].summands(q); ++s) u[D.first[D.block_index(a, q, s, a, q, s)]] = Scalar(1);
    units.push_back(std::move(u));
  }
  auto dga = std::make_shared<AInftyAlgebra>(gb, units, cap);
  std::shared_ptr<const DgEndData> cd = data;
  auto d = [cd](int x) {
    const DgEndData& E = *cd;
    const auto& [bi, k] = E.basis[x];
    const auto& bl = E.blocks[bi];
    const Vec& c = bl.corner[k];
    const int deg = bl.qa - bl.qb;
    SVec out;
    // d o x: then apply the differential of the target complex
    if (bl.qb >= 1) {
      const ProjComplex& pb = E.cx[bl.b];
      for (int u = 0; u < pb.summands(bl.qb - 1); ++u) {
        Vec e = E.alg->mul(c, pb.diffs[bl.qb][bl.t][u]);
        if (is_zero(e)) continue;
        out.add(E.from_element(E.block_index(bl.a, bl.qa, bl.s, bl.b, bl.qb - 1, u), e), Scalar(1));
      }
    }
    const ProjComplex& pa = E.cx[bl.a];
    if (bl.qa + 1 <= pa.length()) {
      Scalar sign = deg % 2 == 0 ? Scalar(-1) : Scalar(1);
      for (int v = 0; v < pa.summands(bl.qa + 1); ++v) {
        Vec e = E.alg->mul(pa.diffs[bl.qa + 1][v][bl.s], c);
        if (is_zero(e)) continue;
        out.add(E.from_element(E.block_index(bl.a, bl.qa + 1, v, bl.b, bl.qb, bl.t), e), sign);
      }
    }
    out.canonicalize();
    return out;
  };
  auto mul = [cd](int x, int y) {
    const DgEndData& E = *cd;
    const auto& bx = E.blocks[E.basis[x].first];
    const auto& by = E.blocks[E.basis[y].first];
    SVec out;
    if (by.b != bx.a || by.qb != bx.qa || by.t != bx.s) return out;
    Vec e = E.alg->mul(by.corner[E.basis[y].second], bx.corner[E.basis[x].second]);
    if (is_zero(e)) return out;
    return E.from_element(E.block_index(by.a, by.qa, by.s, bx.b, bx.qb, bx.t), e);
  };
  dga->set_dg(d, mul);
  return {data, dga};
}

}  // namespace qha

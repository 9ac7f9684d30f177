#include "qha/module.hpp"

#include <random>

#include "qha/errors.hpp"

namespace qha {

namespace {

std::vector<Vec> column_space(const Matrix& m) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.cols(); ++j) {
    Vec c = m.col(j);
    if (!is_zero(c)) cols.push_back(std::move(c));
  }
  return span_basis(cols, m.rows());
}

Echelon echelon_of(const std::vector<Vec>& vs, int n) {
  Echelon e(n);
  for (const auto& v : vs)
    if (!e.insert(v)) throw VerificationError("basis vectors are dependent");
  return e;
}

Vec coords_in(const Echelon& e, const Vec& v) {
  auto c = e.coordinates(v);
  if (!c) throw VerificationError("vector outside the expected subspace");
  return *c;
}

}  // namespace

Representation::Representation(AlgebraPtr alg, int dim, std::vector<Matrix> action)
    : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
  if (static_cast<int>(action_.size()) != alg_->dim()) throw std::invalid_argument("one action matrix per basis element");
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("action matrix has wrong shape");
}

Matrix Representation::act(const Vec& x) const {
  Matrix out(dim_, dim_);
  for (int b = 0; b < alg_->dim(); ++b)
    if (!x[b].is_zero()) out = out + action_[b].scaled(x[b]);
  return out;
}

Vec Representation::act(const Vec& x, const Vec& m) const {
  Vec out = zero_vec(dim_);
  for (int b = 0; b < alg_->dim(); ++b)
    if (!x[b].is_zero()) axpy(out, x[b], action_[b].apply(m));
  return out;
}

std::vector<int> Representation::dim_vector() const {
  std::vector<int> out;
  for (const auto& e : alg_->idempotents()) out.push_back(rank(act(e)));
  return out;
}

void Representation::verify() const {
  if (act(alg_->unit()) != Matrix::identity(dim_)) throw VerificationError("unit does not act as identity");
  for (const auto& g : alg_->generators()) {
    Matrix ag = act(g);
    for (int b = 0; b < alg_->dim(); ++b)
      if (ag * action_[b] != act(alg_->mul(g, alg_->basis_vec(b))))
        throw VerificationError("action is not multiplicative at " + alg_->name(b));
  }
}

Representation zero_module(const AlgebraPtr& a) {
  return Representation(a, 0, std::vector<Matrix>(static_cast<size_t>(a->dim()), Matrix(0, 0)));
}

Representation regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> act;
  for (int b = 0; b < a->dim(); ++b) act.push_back(a->left_mult(a->basis_vec(b)));
  return Representation(a, a->dim(), std::move(act));
}

std::vector<Vec> projective_basis(const FinDimAlgebra& a, const Vec& eps) {
  std::vector<Vec> out;
  for (const auto& e : a.idempotents())
    for (auto& v : a.corner(e, eps)) out.push_back(std::move(v));
  return out;
}

Representation projective_module(const AlgebraPtr& a, const Vec& eps) {
  auto basis = projective_basis(*a, eps);
  Echelon e = echelon_of(basis, a->dim());
  const int n = static_cast<int>(basis.size());
  std::vector<Matrix> act;
  for (int b = 0; b < a->dim(); ++b) {
    Matrix m(n, n);
    for (int j = 0; j < n; ++j) {
      Vec v = a->mul(a->basis_vec(b), basis[j]);
      if (is_zero(v)) continue;
      Vec c = coords_in(e, v);
      for (int i = 0; i < n; ++i) m(i, j) = c[i];
    }
    act.push_back(std::move(m));
  }
  return Representation(a, n, std::move(act));
}

Representation direct_sum(const std::vector<Representation>& ms) {
  if (ms.empty()) throw std::invalid_argument("direct sum of no modules");
  const AlgebraPtr& a = ms[0].algebra();
  int n = 0;
  for (const auto& m : ms) n += m.dim();
  std::vector<Matrix> act;
  for (int b = 0; b < a->dim(); ++b) {
    Matrix out(n, n);
    int off = 0;
    for (const auto& m : ms) {
      out.set_block(off, off, m.action(b));
      off += m.dim();
    }
    act.push_back(std::move(out));
  }
  return Representation(a, n, std::move(act));
}

Representation restrict_module(const SubalgebraEmbedding& emb, const Representation& m) {
  std::vector<Matrix> act;
  for (int b = 0; b < emb.sub->dim(); ++b) act.push_back(m.act(emb.image_basis(b)));
  return Representation(emb.sub, m.dim(), std::move(act));
}

Representation transport_module(const AlgebraPtr& tgt, const Matrix& phi, const Representation& m) {
  auto inv = inverse(phi);
  if (!inv) throw VerificationError("transport map is not invertible");
  std::vector<Matrix> act;
  for (int b = 0; b < tgt->dim(); ++b) act.push_back(m.act(inv->col(b)));
  return Representation(tgt, m.dim(), std::move(act));
}

std::vector<Vec> generated_submodule(const Representation& m, const std::vector<Vec>& gens) {
  const auto& a = m.alg();
  std::vector<Matrix> g;
  for (const auto& x : a.generators()) g.push_back(m.act(x));
  Echelon e(m.dim());
  std::vector<Vec> queue;
  for (const auto& v : gens)
    if (e.insert(v)) queue.push_back(v);
  for (size_t i = 0; i < queue.size(); ++i)
    for (const auto& mat : g) {
      Vec w = mat.apply(queue[i]);
      if (e.insert(w)) queue.push_back(std::move(w));
    }
  return span_basis(queue, m.dim());
}

Subquotient submodule(const Representation& m, const std::vector<Vec>& basis) {
  Echelon e = echelon_of(basis, m.dim());
  const int k = static_cast<int>(basis.size());
  std::vector<Matrix> act;
  for (int b = 0; b < m.alg().dim(); ++b) {
    Matrix out(k, k);
    for (int j = 0; j < k; ++j) {
      Vec c = coords_in(e, m.action(b).apply(basis[j]));
      for (int i = 0; i < k; ++i) out(i, j) = c[i];
    }
    act.push_back(std::move(out));
  }
  return {Representation(m.algebra(), k, std::move(act)), Matrix::from_cols(basis, m.dim()), Matrix()};
}

Subquotient quotient(const Representation& m, const std::vector<Vec>& sub) {
  const int n = m.dim();
  Echelon e(n);
  for (const auto& v : sub) e.insert(v);
  std::vector<int> pos(static_cast<size_t>(n), 0);
  for (int p : e.pivots()) pos[p] = -1;
  int k = 0;
  std::vector<int> comp;
  for (int i = 0; i < n; ++i)
    if (pos[i] == 0) {
      pos[i] = k++;
      comp.push_back(i);
    }
  auto project = [&](const Vec& v) {
    Vec r = e.reduce(v);
    Vec out = zero_vec(k);
    for (int i = 0; i < n; ++i)
      if (pos[i] >= 0) out[pos[i]] = r[i];
    return out;
  };
  Matrix proj(k, n);
  for (int i = 0; i < n; ++i) {
    Vec c = project(unit_vec(n, i));
    for (int r = 0; r < k; ++r) proj(r, i) = c[r];
  }
  Matrix section(n, k);
  for (int r = 0; r < k; ++r) section(comp[r], r) = Scalar(1);
  std::vector<Matrix> act;
  for (int b = 0; b < m.alg().dim(); ++b) act.push_back(proj * m.action(b) * section);
  return {Representation(m.algebra(), k, std::move(act)), proj, section};
}

std::vector<Vec> radical_generators(const FinDimAlgebra& a) {
  return quotient_complement(a.radical(), a.radical_squared(), a.dim());
}

std::vector<Vec> module_radical(const Representation& m) {
  std::vector<Vec> gens;
  for (const auto& r : radical_generators(m.alg())) {
    Matrix ar = m.act(r);
    for (int j = 0; j < m.dim(); ++j) {
      Vec c = ar.col(j);
      if (!is_zero(c)) gens.push_back(std::move(c));
    }
  }
  return generated_submodule(m, gens);
}

Subquotient top(const Representation& m) { return quotient(m, module_radical(m)); }

std::vector<Representation> simple_modules(const AlgebraPtr& a) {
  a->require_split();
  std::vector<Representation> out;
  for (int c = 0; c < a->num_simples(); ++c) {
    int rep = a->class_members(c).front();
    out.push_back(top(projective_module(a, a->idempotent(rep))).mod);
  }
  return out;
}

std::vector<int> composition_multiplicities(const Representation& m) {
  const auto& a = m.alg();
  std::vector<int> out;
  for (int c = 0; c < a.num_simples(); ++c) out.push_back(rank(m.act(a.idempotent(a.class_members(c).front()))));
  return out;
}

std::vector<int> top_multiplicities(const Representation& m) { return composition_multiplicities(top(m).mod); }

ProjectiveCover projective_cover(const Representation& m) {
  const AlgebraPtr& a = m.algebra();
  a->require_split();
  ProjectiveCover pc;
  Echelon e(m.dim());
  for (const auto& v : module_radical(m)) e.insert(v);
  for (int c = 0; c < a->num_simples(); ++c) {
    int i = a->class_members(c).front();
    Matrix ei = m.act(a->idempotent(i));
    for (const auto& v : column_space(ei))
      if (e.insert(v)) {
        pc.summands.push_back(i);
        pc.generators.push_back(v);
      }
  }
  std::vector<Representation> parts;
  std::vector<Vec> cols;
  for (size_t s = 0; s < pc.summands.size(); ++s) {
    const Vec& eps = a->idempotent(pc.summands[s]);
    parts.push_back(projective_module(a, eps));
    for (const auto& x : projective_basis(*a, eps)) cols.push_back(m.act(x, pc.generators[s]));
  }
  pc.module = parts.empty() ? zero_module(a) : direct_sum(parts);
  pc.surjection = Matrix::from_cols(cols, m.dim());
  if (pc.surjection.cols() == 0) pc.surjection = Matrix(m.dim(), 0);
  return pc;
}

bool is_module_map(const Representation& m, const Representation& n, const Matrix& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (const auto& g : m.alg().generators())
    if (n.act(g) * f != f * m.act(g)) return false;
  return true;
}

namespace {

struct Adapted {
  Matrix s, sinv;
  std::vector<int> block_of;  // adapted index -> idempotent
  std::vector<int> start, size;
};

Adapted adapt(const Representation& m) {
  Adapted ad;
  std::vector<Vec> cols;
  const auto& a = m.alg();
  for (int i = 0; i < a.num_idempotents(); ++i) {
    ad.start.push_back(static_cast<int>(cols.size()));
    auto cs = column_space(m.act(a.idempotent(i)));
    ad.size.push_back(static_cast<int>(cs.size()));
    for (auto& c : cs) {
      cols.push_back(std::move(c));
      ad.block_of.push_back(i);
    }
  }
  if (static_cast<int>(cols.size()) != m.dim()) throw VerificationError("idempotents do not decompose the module");
  ad.s = Matrix::from_cols(cols, m.dim());
  if (m.dim() == 0) ad.s = Matrix(0, 0);
  auto inv = inverse(ad.s);
  ad.sinv = *inv;
  return ad;
}

}  // namespace

std::vector<Matrix> hom_space(const Representation& m, const Representation& n) {
  if (m.algebra().get() != n.algebra().get() && m.algebra()->dim() != n.algebra()->dim())
    throw std::invalid_argument("hom_space needs modules over the same algebra");
  const auto& a = m.alg();
  Adapted am = adapt(m), an = adapt(n);
  const int k = a.num_idempotents();
  std::vector<int> off(static_cast<size_t>(k) + 1, 0);
  for (int i = 0; i < k; ++i) off[i + 1] = off[i] + an.size[i] * am.size[i];
  const int unknowns = off[k];
  if (unknowns == 0) return {};
  auto var = [&](int r, int c) {
    int i = an.block_of[r];
    if (am.block_of[c] != i) return -1;
    return off[i] + (r - an.start[i]) * am.size[i] + (c - am.start[i]);
  };
  std::vector<Vec> rows;
  for (const auto& g : a.generators()) {
    bool idem = false;
    for (const auto& e : a.idempotents())
      if (e == g) idem = true;
    if (idem) continue;
    Matrix gn = an.sinv * n.act(g) * an.s;
    Matrix gm = am.sinv * m.act(g) * am.s;
    for (int r = 0; r < n.dim(); ++r)
      for (int c = 0; c < m.dim(); ++c) {
        Vec row = zero_vec(unknowns);
        bool any = false;
        for (int q = 0; q < n.dim(); ++q)
          if (!gn(r, q).is_zero()) {
            int v = var(q, c);
            if (v >= 0) {
              row[v] += gn(r, q);
              any = true;
            }
          }
        for (int q = 0; q < m.dim(); ++q)
          if (!gm(q, c).is_zero()) {
            int v = var(r, q);
            if (v >= 0) {
              row[v] -= gm(q, c);
              any = true;
            }
          }
        if (any && !is_zero(row)) rows.push_back(std::move(row));
      }
  }
  std::vector<Vec> ker;
  if (rows.empty()) {
    for (int i = 0; i < unknowns; ++i) ker.push_back(unit_vec(unknowns, i));
  } else {
    ker = kernel_basis(Matrix::from_rows(rows, unknowns));
  }
  std::vector<Matrix> out;
  for (const auto& v : ker) {
    Matrix x(n.dim(), m.dim());
    for (int r = 0; r < n.dim(); ++r)
      for (int c = 0; c < m.dim(); ++c) {
        int idx = var(r, c);
        if (idx >= 0) x(r, c) = v[idx];
      }
    out.push_back(an.s * x * am.sinv);
  }
  return out;
}

std::string decision_str(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    default: return "undetermined";
  }
}

IsoResult module_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  IsoResult res;
  if (m.dim() != n.dim()) {
    res.decision = Decision::no;
    res.note = "dimensions differ";
    return res;
  }
  if (m.dim_vector() != n.dim_vector()) {
    res.decision = Decision::no;
    res.note = "dimension vectors differ";
    return res;
  }
  if (m.dim() == 0) {
    res.decision = Decision::yes;
    res.witness = Matrix(0, 0);
    return res;
  }
  auto hom = hom_space(m, n);
  if (hom.size() != hom_space(m, m).size() || hom.size() != hom_space(n, n).size()) {
    res.decision = Decision::no;
    res.note = "Hom dimensions differ";
    return res;
  }
  std::mt19937_64 rng(seed);
  const bool rational = Field::current().is_rational();
  const int tries = rational ? 32 : 256;
  const long p = rational ? 0 : static_cast<long>(Field::current().characteristic());
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<long> full(0, p > 0 ? p - 1 : 1);
  for (int t = 0; t < tries; ++t) {
    Matrix f(n.dim(), m.dim());
    for (const auto& h : hom) f = f + h.scaled(Scalar(t < 32 ? small(rng) : full(rng)));
    if (rank(f) == m.dim()) {
      res.decision = Decision::yes;
      res.witness = f;
      return res;
    }
  }
  res.note = "no invertible homomorphism among random samples";
  return res;
}

Vec InducedModule::reduce(const Vec& v) const {
  Vec r = relations.reduce(v);
  Vec out = zero_vec(module.dim());
  for (size_t i = 0; i < r.size(); ++i)
    if (qpos[i] >= 0) out[qpos[i]] = r[i];
  return out;
}

Vec InducedModule::tensor_class(const Vec& a, const Vec& m) const {
  const auto& amb = module.alg();
  Vec v = zero_vec(static_cast<int>(qpos.size()));
  for (size_t i = 0; i < sub_idem.size(); ++i) {
    if (right_basis[i].empty() || left_basis[i].empty()) continue;
    Vec l = coords_in(left_coord[i], amb.mul(a, sub_idem[i]));
    auto r = right_coord[i].coordinates(m);
    if (!r) continue;
    const int rn = static_cast<int>(right_basis[i].size());
    for (size_t p = 0; p < l.size(); ++p) {
      if (l[p].is_zero()) continue;
      for (int q = 0; q < rn; ++q)
        if (!(*r)[q].is_zero()) v[offset[i] + static_cast<int>(p) * rn + q].add_mul(l[p], (*r)[q]);
    }
  }
  return reduce(v);
}

Matrix InducedModule::unit_map(int mdim) const {
  Matrix out(module.dim(), mdim);
  for (int k = 0; k < mdim; ++k) {
    Vec c = tensor_class(module.alg().unit(), unit_vec(mdim, k));
    for (int r = 0; r < module.dim(); ++r) out(r, k) = c[r];
  }
  return out;
}

InducedModule induce(const SubalgebraEmbedding& emb, const Representation& m) {
  const FinDimAlgebra& b = *emb.sub;
  const AlgebraPtr& a = emb.amb;
  if (!b.homogeneous()) throw ScopeError("induction needs a subalgebra basis adapted to its idempotents");
  InducedModule im;
  const int k = b.num_idempotents();
  int total = 0;
  for (int i = 0; i < k; ++i) {
    im.sub_idem.push_back(emb.image(b.idempotent(i)));
    im.left_basis.push_back(projective_basis(*a, im.sub_idem.back()));
    im.left_coord.push_back(echelon_of(im.left_basis.back(), a->dim()));
    im.right_basis.push_back(column_space(m.act(b.idempotent(i))));
    im.right_coord.push_back(echelon_of(im.right_basis.back(), m.dim()));
    im.offset.push_back(total);
    total += static_cast<int>(im.left_basis[i].size() * im.right_basis[i].size());
  }
  Echelon rel(total);
  for (const auto& g : b.generators()) {
    bool idem = false;
    for (const auto& e : b.idempotents())
      if (e == g) idem = true;
    if (idem || is_zero(g)) continue;
    int idx = 0;
    while (g[idx].is_zero()) ++idx;
    const int i = b.src(idx), j = b.tgt(idx);
    const Vec ig = emb.image(g);
    const Matrix gm = m.act(g);
    const int ri = static_cast<int>(im.right_basis[i].size());
    const int rj = static_cast<int>(im.right_basis[j].size());
    for (size_t p = 0; p < im.left_basis[j].size(); ++p) {
      Vec l = coords_in(im.left_coord[i], a->mul(im.left_basis[j][p], ig));
      for (int q = 0; q < ri; ++q) {
        Vec v = zero_vec(total);
        for (size_t p2 = 0; p2 < l.size(); ++p2)
          if (!l[p2].is_zero()) v[im.offset[i] + static_cast<int>(p2) * ri + q] += l[p2];
        Vec gmv = gm.apply(im.right_basis[i][q]);
        if (!is_zero(gmv)) {
          Vec d = coords_in(im.right_coord[j], gmv);
          for (int q2 = 0; q2 < rj; ++q2)
            if (!d[q2].is_zero()) v[im.offset[j] + static_cast<int>(p) * rj + q2] -= d[q2];
        }
        if (!is_zero(v)) rel.insert(v);
      }
    }
  }
  im.qpos.assign(static_cast<size_t>(total), 0);
  for (int p : rel.pivots()) im.qpos[p] = -1;
  int qd = 0;
  for (auto& x : im.qpos)
    if (x == 0) x = qd++;
  im.relations = std::move(rel);
  std::vector<Matrix> act;
  std::vector<std::pair<int, std::pair<int, int>>> qbasis(static_cast<size_t>(qd));
  for (int i = 0; i < k; ++i) {
    const int ri = static_cast<int>(im.right_basis[i].size());
    for (size_t p = 0; p < im.left_basis[i].size(); ++p)
      for (int q = 0; q < ri; ++q) {
        int pos = im.qpos[im.offset[i] + static_cast<int>(p) * ri + q];
        if (pos >= 0) qbasis[pos] = {i, {static_cast<int>(p), q}};
      }
  }
  im.module = Representation(a, qd, std::vector<Matrix>(static_cast<size_t>(a->dim()), Matrix(qd, qd)));
  for (int x = 0; x < a->dim(); ++x) {
    Matrix mx(qd, qd);
    for (int c = 0; c < qd; ++c) {
      auto [i, pq] = qbasis[c];
      const int ri = static_cast<int>(im.right_basis[i].size());
      Vec prod = a->mul(a->basis_vec(x), im.left_basis[i][pq.first]);
      if (is_zero(prod)) continue;
      Vec l = coords_in(im.left_coord[i], prod);
      Vec v = zero_vec(total);
      for (size_t p2 = 0; p2 < l.size(); ++p2)
        if (!l[p2].is_zero()) v[im.offset[i] + static_cast<int>(p2) * ri + pq.second] = l[p2];
      Vec r = im.reduce(v);
      for (int row = 0; row < qd; ++row) mx(row, c) = r[row];
    }
    act.push_back(std::move(mx));
  }
  im.module = Representation(a, qd, std::move(act));
  return im;
}

bool is_induction_exact(const SubalgebraEmbedding& emb) {
  auto bop = std::make_shared<FinDimAlgebra>(opposite(*emb.sub));
  const auto& a = *emb.amb;
  std::vector<Matrix> act;
  for (int b = 0; b < bop->dim(); ++b) act.push_back(a.right_mult(emb.image_basis(b)));
  Representation right(bop, a.dim(), std::move(act));
  return projective_cover(right).module.dim() == a.dim();
}

Vec ProjectiveEndomorphisms::element(int s, int t, const Vec& c) const {
  Vec out = zero_vec(alg->dim());
  Vec k = coords_in(coord[static_cast<size_t>(s) * summands() + t], c);
  for (size_t i = 0; i < k.size(); ++i) out[index[s][t][i]] = k[i];
  return out;
}

Vec ProjectiveEndomorphisms::component(const Vec& r, int s, int t) const {
  Vec out = zero_vec(base->dim());
  for (size_t i = 0; i < index[s][t].size(); ++i)
    if (!r[index[s][t][i]].is_zero()) axpy(out, r[index[s][t][i]], corner[s][t][i]);
  return out;
}

ProjectiveEndomorphisms projective_endomorphisms(const AlgebraPtr& a, const std::vector<Vec>& eps,
                                                 const std::vector<std::string>& names) {
  ProjectiveEndomorphisms pe;
  pe.base = a;
  pe.eps = eps;
  const int n = static_cast<int>(eps.size());
  pe.corner.assign(static_cast<size_t>(n), std::vector<std::vector<Vec>>(static_cast<size_t>(n)));
  pe.index.assign(static_cast<size_t>(n), std::vector<std::vector<int>>(static_cast<size_t>(n)));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      auto c = a->corner(eps[s], eps[t]);
      if (s == t) {
        Echelon e(a->dim());
        std::vector<Vec> ordered{eps[s]};
        e.insert(eps[s]);
        for (auto& v : c)
          if (e.insert(v)) ordered.push_back(v);
        c = ordered;
      }
      pe.corner[s][t] = c;
      pe.coord.push_back(echelon_of(c, a->dim()));
    }
  auto sname = [&](int s) { return s < static_cast<int>(names.size()) ? names[s] : std::to_string(s + 1); };
  std::vector<std::string> bnames;
  std::vector<std::pair<std::pair<int, int>, int>> entries;
  for (int s = 0; s < n; ++s) {
    pe.index[s][s].push_back(static_cast<int>(entries.size()));
    entries.push_back({{s, s}, 0});
    bnames.push_back("id" + sname(s));
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (size_t k = (s == t ? 1 : 0); k < pe.corner[s][t].size(); ++k) {
        pe.index[s][t].push_back(static_cast<int>(entries.size()));
        entries.push_back({{s, t}, static_cast<int>(k)});
        std::string nm = "f" + sname(s) + sname(t);
        if (pe.corner[s][t].size() > (s == t ? 2u : 1u)) nm += "_" + std::to_string(k + (s == t ? 0 : 1));
        bnames.push_back(nm);
      }
  const int d = static_cast<int>(entries.size());
  std::vector<SVec> table(static_cast<size_t>(d) * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      auto [st, kx] = entries[x];
      auto [tu, ky] = entries[y];
      if (st.second != tu.first) continue;
      Vec prod = a->mul(pe.corner[st.first][st.second][kx], pe.corner[tu.first][tu.second][ky]);
      if (is_zero(prod)) continue;
      const int s = st.first, u = tu.second;
      Vec c = coords_in(pe.coord[static_cast<size_t>(s) * n + u], prod);
      SVec sv;
      for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) sv.add(pe.index[s][u][i], c[i]);
      sv.canonicalize();
      table[static_cast<size_t>(x) * d + y] = sv;
    }
  std::vector<Vec> idem;
  for (int s = 0; s < n; ++s) idem.push_back(unit_vec(d, s));
  pe.alg = std::make_shared<FinDimAlgebra>(std::move(bnames), std::move(table), std::move(idem));
  return pe;
}

EndomorphismAlgebra endomorphism_algebra(const std::vector<Representation>& summands) {
  const int n = static_cast<int>(summands.size());
  std::vector<int> off(static_cast<size_t>(n) + 1, 0);
  for (int s = 0; s < n; ++s) {
    if (summands[s].dim() == 0) throw std::invalid_argument("endomorphism algebra of a zero summand");
    off[s + 1] = off[s] + summands[s].dim();
  }
  const int total = off[n];
  // blocks[s][t] = Hom(M_s, M_t) basis, identity first on the diagonal
  std::vector<std::vector<std::vector<Matrix>>> blocks(static_cast<size_t>(n),
                                                       std::vector<std::vector<Matrix>>(static_cast<size_t>(n)));
  std::vector<Echelon> coord;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      auto h = hom_space(summands[s], summands[t]);
      const int len = summands[s].dim() * summands[t].dim();
      Echelon e(len);
      std::vector<Matrix> ordered;
      if (s == t) {
        Matrix id = Matrix::identity(summands[s].dim());
        if (len > 0) {
          e.insert(id.flatten());
          ordered.push_back(id);
        }
      }
      for (auto& m : h)
        if (e.insert(m.flatten())) ordered.push_back(m);
      blocks[s][t] = ordered;
      coord.push_back(std::move(e));
    }
  std::vector<std::pair<std::pair<int, int>, int>> entries;
  std::vector<std::vector<std::vector<int>>> index(static_cast<size_t>(n), std::vector<std::vector<int>>(static_cast<size_t>(n)));
  for (int s = 0; s < n; ++s) {
    index[s][s].push_back(static_cast<int>(entries.size()));
    entries.push_back({{s, s}, 0});
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (size_t k = (s == t ? 1 : 0); k < blocks[s][t].size(); ++k) {
        index[s][t].push_back(static_cast<int>(entries.size()));
        entries.push_back({{s, t}, static_cast<int>(k)});
      }
  const int d = static_cast<int>(entries.size());
  std::vector<SVec> table(static_cast<size_t>(d) * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      auto [st, kx] = entries[x];
      auto [tu, ky] = entries[y];
      if (st.second != tu.first) continue;
      Matrix comp = blocks[tu.first][tu.second][ky] * blocks[st.first][st.second][kx];
      if (comp.is_zero()) continue;
      const int s = st.first, u = tu.second;
      Vec c = coords_in(coord[static_cast<size_t>(s) * n + u], comp.flatten());
      SVec sv;
      for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) sv.add(index[s][u][i], c[i]);
      sv.canonicalize();
      table[static_cast<size_t>(x) * d + y] = sv;
    }
  std::vector<std::string> names;
  std::vector<Matrix> maps;
  for (const auto& [st, k] : entries) {
    names.push_back(st.first == st.second && k == 0 ? "id" + std::to_string(st.first + 1)
                                                     : "h" + std::to_string(st.first + 1) + std::to_string(st.second + 1) +
                                                           "_" + std::to_string(k));
    Matrix big(total, total);
    big.set_block(off[st.second], off[st.first], blocks[st.first][st.second][k]);
    maps.push_back(std::move(big));
  }
  std::vector<Vec> idem;
  for (int s = 0; s < n; ++s) idem.push_back(unit_vec(d, s));
  return {std::make_shared<FinDimAlgebra>(std::move(names), std::move(table), std::move(idem)), std::move(maps)};
}

}  // namespace qha

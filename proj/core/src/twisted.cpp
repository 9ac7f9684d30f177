#include "qha/twisted.hpp"

#include <numeric>

#include "qha/errors.hpp"

namespace qha {

namespace {

struct Chain {
  std::vector<int> xs;
  Matrix prod;
};

// Composable sequences xi_1..xi_k of twist components with nonzero product phi_1...phi_k, k in [1, max_len].
std::vector<Chain> chains(const TwistedModule& t, int max_len) {
  std::vector<Chain> out, frontier;
  const GradedBasis& b = t.base->basis();
  for (const auto& [xi, phi] : t.w)
    if (!phi.is_zero()) frontier.push_back({{xi}, phi});
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Chain> next;
    for (const auto& c : frontier) {
      out.push_back(c);
      if (len == max_len) continue;
      for (const auto& [xi, phi] : t.w) {
        if (b.src[c.xs.back()] != b.tgt[xi]) continue;
        Matrix p = c.prod * phi;
        if (p.is_zero()) continue;
        auto xs = c.xs;
        xs.push_back(xi);
        next.push_back({std::move(xs), std::move(p)});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

int max_arity(const AInftyAlgebra& a) { return a.is_dg() ? 2 : a.cap(); }

void accumulate(std::map<int, Matrix>& acc, const SVec& v, const Matrix& m) {
  for (const auto& [i, c] : v.e) {
    auto it = acc.find(i);
    if (it == acc.end())
      acc.emplace(i, m.scaled(c));
    else
      it->second = it->second + m.scaled(c);
  }
}

void prune(std::map<int, Matrix>& acc) {
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
}

}  // namespace

int TwistedModule::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int TwistedModule::offset(int a) const { return std::accumulate(dims.begin(), dims.begin() + a, 0); }

Matrix TwistedModule::place(int a, int b, const Matrix& blk) const {
  Matrix m(total(), total());
  m.set_block(offset(b), offset(a), blk);
  return m;
}

Matrix TwistedModule::block(const Matrix& full, int a, int b) const {
  return full.block(offset(b), offset(a), dims[b], dims[a]);
}

void TwistedModule::add(int xi, const Matrix& full) {
  const GradedBasis& gb = base->basis();
  if (gb.deg[xi] != 1) throw ScopeError("twist components must have degree 1");
  const int s = gb.src[xi], t = gb.tgt[xi];
  if (!(place(s, t, block(full, s, t)) == full)) throw ScopeError("twist component outside its idempotent block");
  auto it = w.find(xi);
  if (it == w.end())
    w.emplace(xi, full);
  else
    it->second = it->second + full;
  if (w[xi].is_zero()) w.erase(xi);
}

TwistedModule zero_twist(const AInftyPtr& base, std::vector<int> dims) {
  if (static_cast<int>(dims.size()) != base->nobj()) throw ScopeError("dimension vector has wrong length");
  return {base, std::move(dims), {}};
}

TwistedModule simple_twist(const AInftyPtr& base, int a) {
  std::vector<int> dims(static_cast<size_t>(base->nobj()), 0);
  dims[a] = 1;
  return zero_twist(base, dims);
}

bool is_triangular(const TwistedModule& t) {
  const int n = t.total();
  std::vector<Vec> y;
  for (int i = 0; i < n; ++i) y.push_back(unit_vec(n, i));
  for (int step = 0; step <= n; ++step) {
    if (y.empty()) return true;
    std::vector<Vec> next;
    for (const auto& [xi, phi] : t.w)
      for (const auto& v : y) next.push_back(phi.apply(v));
    y = span_basis(next, n);
  }
  return y.empty();
}

std::map<int, Matrix> mc_defect(const TwistedModule& t) {
  if (!is_triangular(t)) throw ScopeError("twist is not triangular");
  std::map<int, Matrix> acc;
  const AInftyAlgebra& a = *t.base;
  for (const auto& c : chains(t, std::min(max_arity(a), std::max(1, t.total())))) {
    SVec v = a.m(c.xs);
    if (!v.empty()) accumulate(acc, v, c.prod);
  }
  prune(acc);
  return acc;
}

bool is_maurer_cartan(const TwistedModule& t) { return mc_defect(t).empty(); }

namespace {

// Coordinates of Hom^p(X, Y): (zeta, row, col) with zeta of degree p, row in Y_tgt, col in X_src.
struct HomCoords {
  std::vector<std::array<int, 3>> c;
  std::map<std::array<int, 3>, int> idx;
};

HomCoords hom_coords(const TwistedModule& x, const TwistedModule& y, int p) {
  HomCoords hc;
  const GradedBasis& b = x.base->basis();
  for (int z = 0; z < b.size(); ++z) {
    if (b.deg[z] != p) continue;
    const int s = b.src[z], t = b.tgt[z];
    for (int r = 0; r < y.dims[t]; ++r)
      for (int q = 0; q < x.dims[s]; ++q) {
        std::array<int, 3> key{z, y.offset(t) + r, x.offset(s) + q};
        hc.idx[key] = static_cast<int>(hc.c.size());
        hc.c.push_back(key);
      }
  }
  return hc;
}

// m_1^tw : Hom^p -> Hom^{p+1} as a matrix.
Matrix twisted_differential(const TwistedModule& x, const TwistedModule& y, int p, const HomCoords& from,
                            const HomCoords& to) {
  const AInftyAlgebra& a = *x.base;
  const GradedBasis& b = a.basis();
  const int ar = max_arity(a);
  auto left = chains(y, ar - 1);
  auto right = chains(x, ar - 1);
  Chain empty_y{{}, Matrix::identity(y.total())}, empty_x{{}, Matrix::identity(x.total())};
  left.insert(left.begin(), empty_y);
  right.insert(right.begin(), empty_x);
  Matrix out(static_cast<int>(to.c.size()), static_cast<int>(from.c.size()));
  std::map<int, std::vector<int>> by_zeta;
  for (int k = 0; k < static_cast<int>(from.c.size()); ++k) by_zeta[from.c[k][0]].push_back(k);
  for (const auto& [z, cols] : by_zeta)
    for (const auto& l : left) {
      if (!l.xs.empty() && b.src[l.xs.back()] != b.tgt[z]) continue;
      for (const auto& r : right) {
        if (!r.xs.empty() && b.src[z] != b.tgt[r.xs.front()]) continue;
        if (static_cast<int>(l.xs.size() + r.xs.size()) + 1 > ar) continue;
        std::vector<int> args = l.xs;
        args.push_back(z);
        args.insert(args.end(), r.xs.begin(), r.xs.end());
        SVec v = a.m(args);
        if (v.empty()) continue;
        const long j1 = static_cast<long>(r.xs.size());
        const Scalar sign = (j1 * (p + 1)) % 2 != 0 ? Scalar(-1) : Scalar(1);
        for (int k : cols) {
          const int row = from.c[k][1], col = from.c[k][2];
          // L * E_{row,col} * R
          for (int i = 0; i < l.prod.rows(); ++i) {
            const Scalar& li = l.prod(i, row);
            if (li.is_zero()) continue;
            for (int j = 0; j < r.prod.cols(); ++j) {
              const Scalar& rj = r.prod(col, j);
              if (rj.is_zero()) continue;
              for (const auto& [zz, cz] : v.e) {
                auto it = to.idx.find({zz, i, j});
                if (it == to.idx.end()) throw VerificationError("twisted differential leaves its block");
                out(it->second, k) += sign * cz * li * rj;
              }
            }
          }
        }
      }
    }
  return out;
}

}  // namespace

H0Hom h0_hom(const TwistedModule& x, const TwistedModule& y) {
  if (x.base.get() != y.base.get()) throw ScopeError("twisted modules over different algebras");
  HomCoords cm = hom_coords(x, y, -1), c0 = hom_coords(x, y, 0), c1 = hom_coords(x, y, 1);
  Matrix d0 = twisted_differential(x, y, 0, c0, c1);
  auto z = kernel_basis(d0);
  std::vector<Vec> bnd;
  if (!cm.c.empty()) {
    Matrix dm = twisted_differential(x, y, -1, cm, c0);
    for (int j = 0; j < dm.cols(); ++j) bnd.push_back(dm.col(j));
  }
  H0Hom out;
  for (const auto& v : quotient_complement(z, bnd, static_cast<int>(c0.c.size()))) {
    std::map<int, Matrix> f;
    for (int k = 0; k < static_cast<int>(v.size()); ++k) {
      if (v[k].is_zero()) continue;
      auto [zeta, r, c] = c0.c[k];
      auto it = f.try_emplace(zeta, y.total(), x.total()).first;
      it->second(r, c) = v[k];
    }
    out.cocycles.push_back(std::move(f));
  }
  out.dim = static_cast<int>(out.cocycles.size());
  return out;
}

Realization realize_full(const DgEnd& e, const TwistedModule& t) {
  if (t.base.get() != e.dga.get()) throw ScopeError("realize needs a twist over the dg End algebra");
  if (!is_maurer_cartan(t)) throw VerificationError("twist does not satisfy the Maurer-Cartan equation");
  const DgEndData& d = *e.data;
  const int r = static_cast<int>(d.cx.size());
  // T^{-q} = sum_a P^{-q}(M_a) (x) X_a, ordered (a, x, p)
  auto offsets = [&](int q) {
    std::vector<int> off{0};
    for (int a = 0; a < r; ++a) off.push_back(off.back() + t.dims[a] * d.cx[a].term_dim(q));
    return off;
  };
  auto o0 = offsets(0), o1 = offsets(1);
  Matrix dmat(o0.back(), o1.back());
  for (int a = 0; a < r; ++a) {
    if (t.dims[a] == 0 || d.cx[a].length() < 1) continue;
    Matrix da = d.cx[a].diff_matrix(1);
    dmat.set_block(o0[a], o1[a], kron(Matrix::identity(t.dims[a]), da));
  }
  for (const auto& [xi, phi] : t.w) {
    const auto& bl = d.blocks[d.basis[xi].first];
    if (bl.qa != 1 || bl.qb != 0) continue;
    Matrix m = d.element_matrix(xi);
    Matrix blk = kron(t.block(phi, bl.a, bl.b), m);
    dmat.set_block(o0[bl.b], o1[bl.a], dmat.block(o0[bl.b], o1[bl.a], blk.rows(), blk.cols()) + blk);
  }
  std::vector<Representation> parts;
  for (int a = 0; a < r; ++a)
    for (int k = 0; k < t.dims[a]; ++k) parts.push_back(d.cx[a].term_module(0));
  Representation t0 = parts.empty() ? zero_module(d.alg) : direct_sum(parts);
  std::vector<Vec> img;
  for (int j = 0; j < dmat.cols(); ++j) img.push_back(dmat.col(j));
  Subquotient q = quotient(t0, img);
  Realization out;
  out.module = q.mod;
  out.projection = q.map;
  out.section = q.section;
  out.t0_offsets.assign(o0.begin(), o0.end() - 1);
  out.dims = t.dims;
  return out;
}

Representation realize(const DgEnd& e, const TwistedModule& t) { return realize_full(e, t).module; }

Matrix realize_map(const DgEnd& e, const Realization& src, const Realization& dst, const Matrix& f) {
  const DgEndData& d = *e.data;
  Matrix tf(dst.projection.cols(), src.projection.cols());
  int xo = 0, yo = 0;
  for (size_t a = 0; a < d.cx.size(); ++a) {
    const int nx = src.dims[a], ny = dst.dims[a];
    if (nx && ny)
      tf.set_block(dst.t0_offsets[a], src.t0_offsets[a],
                   kron(f.block(yo, xo, ny, nx), Matrix::identity(d.cx[a].term_dim(0))));
    xo += nx;
    yo += ny;
  }
  return dst.projection * tf * src.section;
}

TwistedModule twmod_apply(const AInftyMorphism& f, const TwistedModule& t) {
  if (f.source().get() != t.base.get()) throw ScopeError("twist is not over the source of the morphism");
  TwistedModule out{f.target(), t.dims, {}};
  const int ar = std::max(f.max_arity(), 1);
  std::map<int, Matrix> acc;
  for (const auto& c : chains(t, std::min(ar, std::max(1, t.total())))) {
    SVec v = f.f(c.xs);
    if (!v.empty()) accumulate(acc, v, c.prod);
  }
  prune(acc);
  out.w = std::move(acc);
  if (!is_maurer_cartan(out)) throw VerificationError("pushed twist fails the Maurer-Cartan equation");
  return out;
}

TwistedModule twist_of_extension(const TwistedModule& lower, const TwistedModule& upper,
                                 const std::vector<std::pair<int, Matrix>>& cross) {
  if (lower.base.get() != upper.base.get()) throw ScopeError("extension of twists over different algebras");
  const int r = static_cast<int>(lower.dims.size());
  TwistedModule out{lower.base, {}, {}};
  for (int a = 0; a < r; ++a) out.dims.push_back(lower.dims[a] + upper.dims[a]);
  // positions of lower and upper coordinates in the object-ordered sum
  std::vector<int> pl, pu;
  for (int a = 0; a < r; ++a) {
    for (int k = 0; k < lower.dims[a]; ++k) pl.push_back(out.offset(a) + k);
    for (int k = 0; k < upper.dims[a]; ++k) pu.push_back(out.offset(a) + lower.dims[a] + k);
  }
  const int n = out.total();
  auto embed = [&](const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Matrix full(n, n);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) full(rows[i], cols[j]) = m(i, j);
    return full;
  };
  for (const auto& [xi, phi] : lower.w) out.add(xi, embed(phi, pl, pl));
  for (const auto& [xi, phi] : upper.w) out.add(xi, embed(phi, pu, pu));
  for (const auto& [xi, c] : cross) out.add(xi, embed(c, pl, pu));
  return out;
}

}  // namespace qha

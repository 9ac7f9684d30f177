#include "qha/ainfinity.hpp"

#include <map>
#include <sstream>

#include "qha/errors.hpp"

namespace qha {

namespace {

int parity(long x) { return static_cast<int>(((x % 2) + 2) % 2); }
Scalar sign_of(long e) { return parity(e) ? Scalar(-1) : Scalar(1); }

SVec single(int i) {
  SVec s;
  s.add(i, Scalar(1));
  return s;
}

// Expands a multilinear map on basis tuples, skipping non-composable ones early.
SVec multilinear(const GradedBasis& b, const std::vector<SVec>& args,
                 const std::function<SVec(const std::vector<int>&)>& on_basis) {
  SVec out;
  std::vector<int> xs(args.size());
  std::function<void(size_t, const Scalar&)> rec = [&](size_t k, const Scalar& c) {
    if (k == args.size()) {
      SVec v = on_basis(xs);
      if (!v.empty()) out.add(v, c);
      return;
    }
    for (const auto& [i, ci] : args[k].e) {
      if (k > 0 && b.src[xs[k - 1]] != b.tgt[i]) continue;
      xs[k] = i;
      rec(k + 1, c * ci);
    }
  };
  for (const auto& a : args)
    if (a.empty()) return out;
  rec(0, Scalar(1));
  out.canonicalize();
  return out;
}

std::vector<SVec> singles(const std::vector<int>& xs, size_t from, size_t to) {
  std::vector<SVec> out;
  for (size_t k = from; k < to; ++k) out.push_back(single(xs[k]));
  return out;
}

int degree_range(const GradedBasis& b, const std::vector<int>& xs, size_t from, size_t to) {
  int d = 0;
  for (size_t k = from; k < to; ++k) d += b.deg[xs[k]];
  return d;
}

// All compositions of n into parts of size >= 1.
void compositions(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int j = 1; j <= n; ++j) {
    cur.push_back(j);
    compositions(n - j, cur, out);
    cur.pop_back();
  }
}

const std::vector<std::vector<int>>& compositions_of(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[n];
  if (v.empty()) {
    std::vector<int> cur;
    compositions(n, cur, v);
  }
  return v;
}

// Sum over compositions (j_1..j_k) of n with k >= kmin of sign * m_k(g_{j1}(..), ..., g_{jk}(..)).
SVec composite_terms(const std::function<SVec(const std::vector<int>&)>& g,
                     const GradedBasis& sb, const std::vector<int>& xs, int kmin,
                     const std::function<SVec(const std::vector<SVec>&)>& outer) {
  const int n = static_cast<int>(xs.size());
  SVec out;
  for (const auto& js : compositions_of(n)) {
    const int k = static_cast<int>(js.size());
    if (k < kmin) continue;
    long e = 0;
    int before = 0;
    size_t pos = 0;
    std::vector<SVec> parts;
    bool zero = false;
    for (int l = 0; l < k; ++l) {
      const int j = js[l];
      e += static_cast<long>(1 - j) * before;  // block sign
      e += static_cast<long>(1 - j) * degree_range(sb, xs, 0, pos);  // Koszul
      std::vector<int> sub(xs.begin() + pos, xs.begin() + pos + j);
      SVec v = g(sub);
      if (v.empty()) {
        zero = true;
        break;
      }
      parts.push_back(std::move(v));
      before += j;
      pos += j;
    }
    if (zero) continue;
    SVec v = outer(parts);
    if (!v.empty()) out.add(v, sign_of(e));
  }
  out.canonicalize();
  return out;
}

// Sum over r+s+t = n with s in [smin, smax] of (-1)^{rs+t} Koszul * outer(x^r, inner_s, x^t).
SVec insertion_terms(const GradedBasis& b, const std::vector<int>& xs, int smin, int smax,
                     const std::function<SVec(const std::vector<int>&)>& inner,
                     const std::function<SVec(const std::vector<SVec>&)>& outer) {
  const int n = static_cast<int>(xs.size());
  SVec out;
  for (int s = smin; s <= std::min(smax, n); ++s)
    for (int r = 0; r + s <= n; ++r) {
      const int t = n - r - s;
      std::vector<int> mid(xs.begin() + r, xs.begin() + r + s);
      SVec v = inner(mid);
      if (v.empty()) continue;
      long e = static_cast<long>(r) * s + t + static_cast<long>(2 - s) * degree_range(b, xs, 0, r);
      std::vector<SVec> args = singles(xs, 0, r);
      args.push_back(std::move(v));
      for (auto& a : singles(xs, r + s, n)) args.push_back(std::move(a));
      SVec w = outer(args);
      if (!w.empty()) out.add(w, sign_of(e));
    }
  out.canonicalize();
  return out;
}

}  // namespace

void GradedBasis::add(int d, int s, int t, std::string name) {
  deg.push_back(d);
  src.push_back(s);
  tgt.push_back(t);
  names.push_back(std::move(name));
}

bool GradedBasis::composable(const std::vector<int>& xs) const {
  for (size_t k = 0; k + 1 < xs.size(); ++k)
    if (src[xs[k]] != tgt[xs[k + 1]]) return false;
  return true;
}

int GradedBasis::degree(const std::vector<int>& xs) const {
  int d = 0;
  for (int x : xs) d += deg[x];
  return d;
}

std::vector<int> GradedBasis::dims_in_degree(int d) const {
  std::vector<int> out(static_cast<size_t>(nobj) * nobj, 0);
  for (int i = 0; i < size(); ++i)
    if (deg[i] == d) ++out[static_cast<size_t>(tgt[i]) * nobj + src[i]];
  return out;
}

AInftyAlgebra::AInftyAlgebra(GradedBasis basis, std::vector<Vec> units, int cap)
    : basis_(std::move(basis)), units_(std::move(units)), cap_(cap) {
  if (static_cast<int>(units_.size()) != basis_.nobj) throw ScopeError("one unit per object required");
  unit_index_.assign(basis_.nobj, -1);
  unit_of_.assign(basis_.size(), -1);
  for (int a = 0; a < basis_.nobj; ++a) {
    int idx = -1, nz = 0;
    for (int i = 0; i < static_cast<int>(units_[a].size()); ++i)
      if (!units_[a][i].is_zero()) {
        ++nz;
        idx = units_[a][i].is_one() ? i : -2;
      }
    if (nz == 1 && idx >= 0) {
      unit_index_[a] = idx;
      unit_of_[idx] = a;
    }
  }
}

bool AInftyAlgebra::is_minimal() const {
  for (int i = 0; i < dim(); ++i)
    if (!m(std::vector<int>{i}).empty()) return false;
  return true;
}

SVec AInftyAlgebra::m(const std::vector<int>& args) const {
  const size_t n = args.size();
  if (n == 0 || !basis_.composable(args)) return {};
  if (d_) {
    if (n == 1) {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->d.find(args[0]);
      if (it != cache_->d.end()) return it->second;
    } else if (n == 2) {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->mul.find({args[0], args[1]});
      if (it != cache_->mul.end()) return it->second;
    } else {
      return {};
    }
    SVec v = n == 1 ? d_(args[0]) : mul_(args[0], args[1]);
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (n == 1)
      cache_->d[args[0]] = v;
    else
      cache_->mul[{args[0], args[1]}] = v;
    return v;
  }
  if (n == 2) {
    if (is_unit(args[0])) return single(args[1]);
    if (is_unit(args[1])) return single(args[0]);
  } else {
    for (int x : args)
      if (is_unit(x)) return {};
  }
  auto it = table_.find(args);
  return it == table_.end() ? SVec{} : it->second;
}

SVec AInftyAlgebra::m(const std::vector<SVec>& args) const {
  return multilinear(basis_, args, [this](const std::vector<int>& xs) { return m(xs); });
}

void AInftyAlgebra::set_op(const std::vector<int>& args, SVec v) {
  v.canonicalize();
  if (v.empty())
    table_.erase(args);
  else
    table_[args] = std::move(v);
}

void AInftyAlgebra::set_dg(std::function<SVec(int)> d, std::function<SVec(int, int)> mul) {
  d_ = std::move(d);
  mul_ = std::move(mul);
}

std::string AInftyAlgebra::element_str(const SVec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.e) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << c.str() << "*";
    os << basis_.names[i];
  }
  return os.str();
}

AInftyMorphism::AInftyMorphism(AInftyPtr source, AInftyPtr target) : src_(std::move(source)), tgt_(std::move(target)) {}

SVec AInftyMorphism::f(const std::vector<int>& args) const {
  if (args.empty() || !src_->basis().composable(args)) return {};
  if (args.size() == 1) {
    if (src_->is_unit(args[0])) return SVec::from_dense(tgt_->units()[src_->unit_object(args[0])]);
    auto it = table_.find(args);
    if (it != table_.end()) return it->second;
    return f1_ ? f1_(args[0]) : SVec{};
  }
  for (int x : args)
    if (src_->is_unit(x)) return {};
  auto it = table_.find(args);
  return it == table_.end() ? SVec{} : it->second;
}

SVec AInftyMorphism::f(const std::vector<SVec>& args) const {
  return multilinear(src_->basis(), args, [this](const std::vector<int>& xs) { return f(xs); });
}

void AInftyMorphism::set(const std::vector<int>& args, SVec v) {
  v.canonicalize();
  if (v.empty()) {
    table_.erase(args);
    return;
  }
  table_[args] = std::move(v);
  max_arity_ = std::max(max_arity_, static_cast<int>(args.size()));
}

void AInftyMorphism::set_linear(std::function<SVec(int)> f1) { f1_ = std::move(f1); }

Matrix AInftyMorphism::linear_part() const {
  Matrix m(tgt_->dim(), src_->dim());
  for (int j = 0; j < src_->dim(); ++j)
    for (const auto& [i, c] : f(std::vector<int>{j}).e) m(i, j) = c;
  return m;
}

std::vector<std::vector<int>> composable_tuples(const GradedBasis& b, int n, const std::function<bool(int)>& keep) {
  std::vector<int> ok;
  for (int i = 0; i < b.size(); ++i)
    if (!keep || keep(i)) ok.push_back(i);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i : ok) {
      if (!cur.empty() && b.src[cur.back()] != b.tgt[i]) continue;
      cur.push_back(i);
      rec();
      cur.pop_back();
    }
  };
  if (n >= 1) rec();
  return out;
}

bool StasheffReport::ok() const {
  for (int d : defects)
    if (d != 0) return false;
  return true;
}

std::string StasheffReport::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < defects.size(); ++k) os << (k ? " " : "") << "n=" << k + 1 << ":" << defects[k];
  return os.str();
}

SVec stasheff_defect(const AInftyAlgebra& a, const std::vector<int>& xs) {
  const int n = static_cast<int>(xs.size());
  auto inner = [&](const std::vector<int>& ys) { return a.m(ys); };
  auto outer = [&](const std::vector<SVec>& args) { return a.m(args); };
  return insertion_terms(a.basis(), xs, 1, n, inner, outer);
}

namespace {
std::function<bool(int)> non_unit_filter(const AInftyAlgebra& a, int n) {
  // tuples with unit slots are covered by strict unitality except in arity 2
  if (n == 2 || a.units().empty()) return {};
  return [&a](int i) { return !a.is_unit(i); };
}
}  // namespace

StasheffReport check_stasheff(const AInftyAlgebra& a, int up_to) {
  StasheffReport rep;
  for (int n = 1; n <= up_to; ++n) {
    int bad = 0;
    for (const auto& xs : composable_tuples(a.basis(), n, non_unit_filter(a, n)))
      if (!stasheff_defect(a, xs).empty()) ++bad;
    rep.defects.push_back(bad);
  }
  return rep;
}

SVec morphism_defect(const AInftyMorphism& f, const std::vector<int>& xs) {
  const AInftyAlgebra& src = *f.source();
  const AInftyAlgebra& tgt = *f.target();
  const int n = static_cast<int>(xs.size());
  SVec lhs = insertion_terms(src.basis(), xs, 1, n, [&](const std::vector<int>& ys) { return src.m(ys); },
                             [&](const std::vector<SVec>& args) { return f.f(args); });
  SVec rhs = composite_terms([&](const std::vector<int>& ys) { return f.f(ys); }, src.basis(), xs, 1,
                             [&](const std::vector<SVec>& parts) { return tgt.m(parts); });
  lhs.add(rhs, Scalar(-1));
  lhs.canonicalize();
  return lhs;
}

StasheffReport check_morphism(const AInftyMorphism& f, int up_to) {
  StasheffReport rep;
  const AInftyAlgebra& src = *f.source();
  for (int n = 1; n <= up_to; ++n) {
    int bad = 0;
    for (const auto& xs : composable_tuples(src.basis(), n, non_unit_filter(src, n)))
      if (!morphism_defect(f, xs).empty()) ++bad;
    rep.defects.push_back(bad);
  }
  return rep;
}

bool check_strict_unit(const AInftyAlgebra& a, int up_to) {
  const GradedBasis& b = a.basis();
  std::vector<SVec> u;
  for (const auto& v : a.units()) u.push_back(SVec::from_dense(v));
  for (int x = 0; x < a.dim(); ++x) {
    if (!(a.m(std::vector<SVec>{u[b.tgt[x]], single(x)}) == single(x))) return false;
    if (!(a.m(std::vector<SVec>{single(x), u[b.src[x]]}) == single(x))) return false;
  }
  for (int o = 0; o < a.nobj(); ++o)
    if (!a.m(std::vector<SVec>{u[o]}).empty()) return false;
  for (int n = 3; n <= up_to; ++n)
    for (const auto& xs : composable_tuples(b, n - 1, non_unit_filter(a, 3)))
      for (int slot = 0; slot < n; ++slot) {
        std::vector<SVec> args;
        for (int k = 0; k < n - 1; ++k) {
          if (k == slot) args.push_back(u[b.tgt[xs[k]]]);
          args.push_back(single(xs[k]));
        }
        if (slot == n - 1) args.push_back(u[b.src[xs.back()]]);
        if (!a.m(args).empty()) return false;
      }
  return true;
}

AInftyMorphism identity_morphism(const AInftyPtr& a) {
  AInftyMorphism f(a, a);
  f.set_linear([](int x) { return single(x); });
  return f;
}

AInftyMorphism compose(const AInftyMorphism& f, const AInftyMorphism& g, int up_to) {
  if (g.target().get() != f.source().get() && g.target()->dim() != f.source()->dim())
    throw ScopeError("compose: target of g is not the source of f");
  AInftyMorphism out(g.source(), f.target());
  const AInftyAlgebra& src = *g.source();
  for (int n = 1; n <= up_to; ++n)
    for (const auto& xs : composable_tuples(src.basis(), n, [&](int i) { return !src.is_unit(i); })) {
      SVec v = composite_terms([&](const std::vector<int>& ys) { return g.f(ys); }, src.basis(), xs, 1,
                               [&](const std::vector<SVec>& parts) { return f.f(parts); });
      out.set(xs, std::move(v));
    }
  return out;
}

AInftyMorphism invert(const AInftyMorphism& f, int up_to) {
  const AInftyAlgebra& tgt = *f.target();
  Matrix f1 = f.linear_part();
  auto inv = inverse(f1);
  if (!inv) throw ScopeError("invert: linear part is not invertible");
  AInftyMorphism g(f.target(), f.source());
  for (int x = 0; x < tgt.dim(); ++x)
    if (!tgt.is_unit(x)) g.set({x}, SVec::from_dense(inv->col(x)));
  for (int n = 2; n <= up_to; ++n)
    for (const auto& xs : composable_tuples(tgt.basis(), n, [&](int i) { return !tgt.is_unit(i); })) {
      SVec rest = composite_terms([&](const std::vector<int>& ys) { return g.f(ys); }, tgt.basis(), xs,
                                  2, [&](const std::vector<SVec>& parts) { return f.f(parts); });
      if (rest.empty()) continue;
      Vec w = inv->apply(rest.dense(f1.rows()));
      g.set(xs, SVec::from_dense(scaled(w, Scalar(-1))));
    }
  return g;
}

bool morphisms_equal(const AInftyMorphism& f, const AInftyMorphism& g, int up_to) {
  const AInftyAlgebra& src = *f.source();
  for (int n = 1; n <= up_to; ++n)
    for (const auto& xs : composable_tuples(src.basis(), n, {}))
      if (!(f.f(xs) == g.f(xs))) return false;
  return true;
}

namespace {

struct Contraction {
  // global basis index -> (block, local index)
  std::vector<std::pair<int, int>> where;
  std::vector<std::array<int, 3>> keys;  // (deg, src, tgt)
  std::vector<std::vector<int>> members;
  std::map<std::array<int, 3>, int> block_of;
  // per block: change of basis, its inverse, and the split [B | H | C]
  std::vector<Matrix> sinv;
  std::vector<int> nb, nh;
  std::vector<std::vector<Vec>> cpre;  // for each B vector, the C element of the previous block with that image
  std::vector<std::vector<Vec>> hvec;

  Vec local(const SVec& v, int blk) const {
    Vec out = zero_vec(static_cast<int>(members[blk].size()));
    for (const auto& [i, c] : v.e) {
      if (where[i].first != blk) throw VerificationError("transfer: inhomogeneous element");
      out[where[i].second] += c;
    }
    return out;
  }
  SVec global(const Vec& v, int blk) const {
    SVec out;
    for (size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) out.add(members[blk][k], v[k]);
    out.canonicalize();
    return out;
  }
};

std::vector<std::pair<int, SVec>> split_blocks(const Contraction& c, const SVec& v) {
  std::map<int, SVec> parts;
  for (const auto& [i, x] : v.e) parts[c.where[i].first].add(i, x);
  return {parts.begin(), parts.end()};
}

Contraction build_contraction(const AInftyAlgebra& dg) {
  Contraction c;
  const GradedBasis& b = dg.basis();
  c.where.resize(b.size());
  for (int i = 0; i < b.size(); ++i) {
    std::array<int, 3> key{b.deg[i], b.src[i], b.tgt[i]};
    auto it = c.block_of.find(key);
    int blk;
    if (it == c.block_of.end()) {
      blk = static_cast<int>(c.keys.size());
      c.block_of[key] = blk;
      c.keys.push_back(key);
      c.members.emplace_back();
    } else {
      blk = it->second;
    }
    c.where[i] = {blk, static_cast<int>(c.members[blk].size())};
    c.members[blk].push_back(i);
  }
  const int nblk = static_cast<int>(c.keys.size());
  auto neighbour = [&](int blk, int shift) {
    auto key = c.keys[blk];
    key[0] += shift;
    auto it = c.block_of.find(key);
    return it == c.block_of.end() ? -1 : it->second;
  };
  // differential out of each block as a matrix into the next block
  std::vector<Matrix> dmat(nblk);
  for (int blk = 0; blk < nblk; ++blk) {
    const int nxt = neighbour(blk, 1);
    const int rows = nxt < 0 ? 0 : static_cast<int>(c.members[nxt].size());
    Matrix m(rows, static_cast<int>(c.members[blk].size()));
    for (size_t j = 0; j < c.members[blk].size(); ++j) {
      SVec dv = dg.m(std::vector<int>{c.members[blk][j]});
      if (dv.empty()) continue;
      if (nxt < 0) throw VerificationError("transfer: differential leaves the basis");
      Vec l = c.local(dv, nxt);
      for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = l[i];
    }
    dmat[blk] = std::move(m);
  }
  std::vector<std::vector<Vec>> zsp(nblk), csp(nblk);
  for (int blk = 0; blk < nblk; ++blk) {
    const int n = static_cast<int>(c.members[blk].size());
    zsp[blk] = kernel_basis(dmat[blk]);
    std::vector<Vec> std_basis;
    for (int k = 0; k < n; ++k) std_basis.push_back(unit_vec(n, k));
    csp[blk] = quotient_complement(std_basis, zsp[blk], n);
  }
  c.sinv.resize(nblk);
  c.nb.resize(nblk);
  c.nh.resize(nblk);
  c.cpre.resize(nblk);
  c.hvec.resize(nblk);
  for (int blk = 0; blk < nblk; ++blk) {
    const int n = static_cast<int>(c.members[blk].size());
    std::vector<Vec> bvec;
    const int prv = neighbour(blk, -1);
    if (prv >= 0)
      for (const auto& x : csp[prv]) {
        bvec.push_back(dmat[prv].apply(x));
        c.cpre[blk].push_back(x);
      }
    // unit first among cohomology representatives
    std::vector<Vec> hcand;
    const auto& key = c.keys[blk];
    if (key[0] == 0 && key[1] == key[2]) {
      SVec u = SVec::from_dense(dg.units()[key[1]]);
      if (!u.empty()) hcand.push_back(c.local(u, blk));
    }
    for (const auto& z : zsp[blk]) hcand.push_back(z);
    std::vector<Vec> hs;
    {
      Echelon e(n);
      for (const auto& v : bvec) e.insert(v);
      for (const auto& v : hcand)
        if (e.insert(v)) hs.push_back(v);
    }
    if (!hcand.empty() && key[0] == 0 && key[1] == key[2] && !hs.empty() && hs.front() != hcand.front())
      throw VerificationError("transfer: unit is a coboundary");
    std::vector<Vec> cols = bvec;
    for (const auto& v : hs) cols.push_back(v);
    for (const auto& v : csp[blk]) cols.push_back(v);
    if (static_cast<int>(cols.size()) != n) throw VerificationError("transfer: contraction basis has wrong size");
    c.nb[blk] = static_cast<int>(bvec.size());
    c.nh[blk] = static_cast<int>(hs.size());
    c.hvec[blk] = hs;
    if (n > 0) {
      auto inv = inverse(Matrix::from_cols(cols, n));
      if (!inv) throw VerificationError("transfer: contraction basis is singular");
      c.sinv[blk] = *inv;
    }
  }
  return c;
}

}  // namespace

Transfer homotopy_transfer(const AInftyPtr& dg, bool positive_only) {
  Contraction c = build_contraction(*dg);
  const int nobj = dg->nobj();
  GradedBasis gb;
  gb.nobj = nobj;
  std::vector<std::pair<int, int>> origin;  // (block, index in H)
  std::vector<Vec> units(nobj);
  std::vector<int> unit_pos(nobj, -1);
  for (int blk = 0; blk < static_cast<int>(c.keys.size()); ++blk) {
    const auto& key = c.keys[blk];
    for (int k = 0; k < c.nh[blk]; ++k) {
      const bool is_unit = key[0] == 0 && key[1] == key[2] && k == 0;
      if (positive_only && key[0] <= 0 && !is_unit) continue;
      if (is_unit) unit_pos[key[1]] = gb.size();
      std::string name = (is_unit ? "1_" : "x" + std::to_string(key[0]) + "_") + std::to_string(key[1] + 1) +
                         (is_unit ? "" : std::to_string(key[2] + 1) + (c.nh[blk] > 1 ? "_" + std::to_string(k + 1) : ""));
      gb.add(key[0], key[1], key[2], name);
      origin.emplace_back(blk, k);
    }
  }
  for (int a = 0; a < nobj; ++a) {
    if (unit_pos[a] < 0) throw VerificationError("transfer: object without unit class");
    units[a] = unit_vec(gb.size(), unit_pos[a]);
  }
  auto model = std::make_shared<AInftyAlgebra>(gb, units, dg->cap());
  Transfer tr;
  tr.model = model;
  for (int k = 0; k < gb.size(); ++k) {
    tr.source_degrees.push_back(gb.deg[k]);
    tr.rep.push_back(c.global(c.hvec[origin[k].first][origin[k].second], origin[k].first));
  }
  std::map<std::pair<int, int>, int> model_index;
  for (int k = 0; k < gb.size(); ++k) model_index[origin[k]] = k;
  auto incl = std::make_shared<AInftyMorphism>(model, dg);
  for (int k = 0; k < gb.size(); ++k)
    if (!model->is_unit(k)) incl->set({k}, tr.rep[k]);
  // p and h on a homogeneous element of the dg algebra
  auto project = [&](const SVec& v) {
    SVec out;
    for (const auto& [blk, part] : split_blocks(c, v)) {
      Vec y = c.sinv[blk].apply(c.local(part, blk));
      for (int k = 0; k < c.nh[blk]; ++k) {
        const Scalar& coef = y[c.nb[blk] + k];
        if (coef.is_zero()) continue;
        auto it = model_index.find({blk, k});
        if (it == model_index.end()) throw VerificationError("transfer: product leaves the kept cohomology");
        out.add(it->second, coef);
      }
    }
    out.canonicalize();
    return out;
  };
  auto homotopy = [&](const SVec& v) {
    SVec out;
    for (const auto& [blk, part] : split_blocks(c, v)) {
      Vec y = c.sinv[blk].apply(c.local(part, blk));
      auto key = c.keys[blk];
      key[0] -= 1;
      auto it = c.block_of.find(key);
      for (int k = 0; k < c.nb[blk]; ++k) {
        if (y[k].is_zero()) continue;
        out.add(c.global(c.cpre[blk][k], it->second), y[k]);
      }
    }
    out.canonicalize();
    return out;
  };
  auto keep = [&](int i) { return !model->is_unit(i) && (!positive_only || gb.deg[i] > 0); };
  const int cap = dg->cap();
  for (int n = 2; n <= cap; ++n) {
    bool any = false;
    for (const auto& xs : composable_tuples(gb, n, keep)) {
      SVec phi = composite_terms([&](const std::vector<int>& ys) { return incl->f(ys); }, gb, xs, 2,
                                 [&](const std::vector<SVec>& parts) { return dg->m(parts); });
      SVec lower = insertion_terms(gb, xs, 2, n - 1, [&](const std::vector<int>& ys) { return model->m(ys); },
                                   [&](const std::vector<SVec>& args) { return incl->f(args); });
      phi.add(lower, Scalar(-1));
      phi.canonicalize();
      if (phi.empty()) continue;
      if (!dg->m(std::vector<SVec>{phi}).empty()) throw VerificationError("transfer: obstruction is not a cocycle");
      SVec mn = project(phi);
      SVec fn = homotopy(phi);
      if (!mn.empty() || !fn.empty()) any = true;
      model->set_op(xs, mn);
      SVec neg;
      neg.add(fn, Scalar(-1));
      neg.canonicalize();
      incl->set(xs, neg);
    }
    if (n == cap && any) throw ScopeError("cap too small: higher operations do not vanish at arity " + std::to_string(cap));
  }
  tr.inclusion = incl;
  return tr;
}

std::shared_ptr<AInftyAlgebra> truncate(const AInftyAlgebra& a, std::vector<int>* kept) {
  if (a.is_dg()) throw ScopeError("truncate needs a minimal model");
  std::vector<int> keep, pos(a.dim(), -1);
  GradedBasis gb;
  gb.nobj = a.nobj();
  const GradedBasis& b = a.basis();
  for (int i = 0; i < a.dim(); ++i)
    if (a.is_unit(i) || b.deg[i] > 0) {
      pos[i] = gb.size();
      keep.push_back(i);
      gb.add(b.deg[i], b.src[i], b.tgt[i], b.names[i]);
    }
  std::vector<Vec> units;
  for (int o = 0; o < a.nobj(); ++o) {
    if (a.unit_index(o) < 0) throw ScopeError("truncate needs unit basis elements");
    units.push_back(unit_vec(gb.size(), pos[a.unit_index(o)]));
  }
  auto out = std::make_shared<AInftyAlgebra>(gb, units, a.cap());
  for (const auto& [args, v] : a.table()) {
    std::vector<int> nargs;
    bool ok = true;
    for (int x : args) {
      if (pos[x] < 0) ok = false;
      nargs.push_back(pos[x]);
    }
    if (!ok) continue;
    SVec nv;
    for (const auto& [i, c] : v.e) {
      if (pos[i] < 0) throw VerificationError("truncate: operation leaves the positive part");
      nv.add(pos[i], c);
    }
    out->set_op(nargs, nv);
  }
  if (kept) *kept = keep;
  return out;
}

bool is_coconnected(const AInftyAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    const int d = a.basis().deg[i];
    if (d < 0 || (d == 0 && !a.is_unit(i))) return false;
  }
  return true;
}

AInftyMorphism complete_triangle(const AInftyMorphism& f, const AInftyMorphism& fprime, int up_to) {
  if (!f.target()->is_minimal() || !is_coconnected(*f.target()))
    throw ScopeError("complete_triangle needs a minimal coconnected target");
  AInftyMorphism inv = invert(f, up_to);
  return compose(inv, fprime, up_to);
}

AInftyMorphism postcompose_strict(const AInftyMorphism& f, const AInftyPtr& new_target,
                                  const std::function<SVec(int)>& strict) {
  auto apply = [strict](const SVec& v) {
    SVec out;
    for (const auto& [i, c] : v.e) out.add(strict(i), c);
    out.canonicalize();
    return out;
  };
  AInftyMorphism out(f.source(), new_target);
  out.set_linear([f, apply](int x) { return apply(f.f(std::vector<int>{x})); });
  for (const auto& [args, v] : f.table())
    if (args.size() >= 2) out.set(args, apply(v));
  return out;
}

}  // namespace qha

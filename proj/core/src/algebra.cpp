#include "qha/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qha/errors.hpp"

namespace qha {

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

std::string Quiver::vertex_name(int v) const {
  if (v >= 0 && v < static_cast<int>(vertex_names.size())) return vertex_names[v];
  return std::to_string(v + 1);
}

int Path::src(const Quiver& q) const { return arrows.empty() ? vertex : q.arrows[arrows.back()].src; }
int Path::tgt(const Quiver& q) const { return arrows.empty() ? vertex : q.arrows[arrows.front()].tgt; }

FinDimAlgebra::FinDimAlgebra(std::vector<std::string> names, std::vector<SVec> table, std::vector<Vec> idempotents)
    : names_(std::move(names)), table_(std::move(table)), idem_(std::move(idempotents)) {
  const int d = dim();
  if (static_cast<int>(table_.size()) != d * d) throw std::invalid_argument("structure table has wrong size");
  if (idem_.empty()) throw std::invalid_argument("algebra needs at least one idempotent");
  unit_ = zero_vec(d);
  for (const auto& e : idem_) {
    if (static_cast<int>(e.size()) != d) throw std::invalid_argument("idempotent has wrong length");
    if (qha::is_zero(e)) throw VerificationError("idempotent is zero");
    unit_ = unit_ + e;
  }
  for (size_t i = 0; i < idem_.size(); ++i)
    for (size_t j = 0; j < idem_.size(); ++j) {
      Vec p = mul(idem_[i], idem_[j]);
      if (i == j ? p != idem_[i] : !qha::is_zero(p)) throw VerificationError("idempotents are not orthogonal");
    }
  src_.assign(static_cast<size_t>(d), -1);
  tgt_.assign(static_cast<size_t>(d), -1);
  for (int b = 0; b < d; ++b) {
    Vec x = basis_vec(b);
    if (mul(unit_, x) != x || mul(x, unit_) != x) throw VerificationError("unit does not act as identity");
    for (int i = 0; i < num_idempotents(); ++i) {
      if (mul(x, idem_[i]) == x) src_[b] = i;
      if (mul(idem_[i], x) == x) tgt_[b] = i;
    }
  }
}

bool FinDimAlgebra::homogeneous() const {
  return std::all_of(src_.begin(), src_.end(), [](int s) { return s >= 0; }) &&
         std::all_of(tgt_.begin(), tgt_.end(), [](int s) { return s >= 0; });
}

Vec FinDimAlgebra::mul(const Vec& x, const Vec& y) const {
  const int d = dim();
  Vec out = zero_vec(d);
  std::vector<int> nx, ny;
  for (int i = 0; i < d; ++i) {
    if (!x[i].is_zero()) nx.push_back(i);
    if (!y[i].is_zero()) ny.push_back(i);
  }
  for (int i : nx)
    for (int j : ny) {
      const SVec& s = mul(i, j);
      if (s.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : s.e) out[k].add_mul(c, v);
    }
  return out;
}

Matrix FinDimAlgebra::left_mult(const Vec& x) const {
  const int d = dim();
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j)
      for (const auto& [k, v] : mul(i, j).e) m(k, j).add_mul(x[i], v);
  }
  return m;
}

Matrix FinDimAlgebra::right_mult(const Vec& x) const {
  const int d = dim();
  Matrix m(d, d);
  for (int j = 0; j < d; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < d; ++i)
      for (const auto& [k, v] : mul(i, j).e) m(k, i).add_mul(x[j], v);
  }
  return m;
}

int FinDimAlgebra::idempotent_basis_index(int i) const {
  const Vec& e = idem_[i];
  int idx = -1;
  for (int b = 0; b < dim(); ++b) {
    if (e[b].is_zero()) continue;
    if (idx >= 0 || !e[b].is_one()) return -1;
    idx = b;
  }
  return idx;
}

void FinDimAlgebra::verify_associative() const {
  const int d = dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const SVec& ij = mul(i, j);
      for (int k = 0; k < d; ++k) {
        SVec lhs, rhs;
        for (const auto& [m, c] : ij.e) lhs.add(mul(m, k), c);
        for (const auto& [m, c] : mul(j, k).e) rhs.add(mul(i, m), c);
        if (!(lhs == rhs))
          throw VerificationError("associativity fails on (" + names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
      }
    }
}

std::vector<Vec> FinDimAlgebra::compute_radical() const {
  const int d = dim();
  if (pres_) {
    std::vector<Vec> out;
    for (int b = 0; b < d; ++b)
      if (pres_->basis_paths[b].length() >= 1) out.push_back(basis_vec(b));
    return out;
  }
  Vec tr = zero_vec(d);
  for (int k = 0; k < d; ++k)
    for (int m = 0; m < d; ++m) tr[k] += mul(k, m).get(m);
  Matrix t(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : mul(i, j).e) t(i, j).add_mul(c, tr[k]);
  std::vector<Vec> rad = span_basis(kernel_basis(t), d);
  if (Field::current().is_rational()) return rad;
  Echelon e(d);
  for (const auto& r : rad) e.insert(r);
  for (const auto& r : rad)
    for (int b = 0; b < d; ++b)
      if (!e.contains(mul(basis_vec(b), r)) || !e.contains(mul(r, basis_vec(b))))
        throw VerificationError("trace-form radical is not an ideal (characteristic too small for this algebra)");
  std::vector<Vec> power = rad;
  for (int step = 0; step <= d && !power.empty(); ++step) power = span_basis(ideal_product(*this, power, rad), d);
  if (!power.empty()) throw VerificationError("trace-form radical is not nilpotent");
  return rad;
}

const std::vector<Vec>& FinDimAlgebra::radical() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->rad) cache_->rad = compute_radical();
  return *cache_->rad;
}

const std::vector<Vec>& FinDimAlgebra::radical_squared() const {
  const auto& rad = radical();
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->rad2) cache_->rad2 = span_basis(ideal_product(*this, rad, rad), dim());
  return *cache_->rad2;
}

std::vector<Vec> FinDimAlgebra::corner(const Vec& ej, const Vec& ei) const {
  std::vector<Vec> vs;
  for (int b = 0; b < dim(); ++b) {
    Vec x = mul(mul(ej, basis_vec(b)), ei);
    if (!qha::is_zero(x)) vs.push_back(std::move(x));
  }
  return span_basis(vs, dim());
}

namespace {
int corner_rad_dim(const FinDimAlgebra& a, const Vec& ej, const Vec& ei) {
  std::vector<Vec> vs;
  for (const auto& r : a.radical()) vs.push_back(a.mul(a.mul(ej, r), ei));
  return static_cast<int>(span_basis(vs, a.dim()).size());
}

// (dim e_j A e_i, dim e_j rad e_i) for idempotents i, j.
std::pair<int, int> corner_dims(const FinDimAlgebra& a, int j, int i) {
  if (!a.homogeneous())
    return {static_cast<int>(a.corner(a.idempotent(j), a.idempotent(i)).size()),
            corner_rad_dim(a, a.idempotent(j), a.idempotent(i))};
  const int d = a.dim();
  int full = 0;
  for (int b = 0; b < d; ++b)
    if (a.src(b) == i && a.tgt(b) == j) ++full;
  if (full == 0) return {0, 0};
  std::vector<Vec> vs;
  for (const auto& r : a.radical()) {
    Vec x = zero_vec(d);
    bool any = false;
    for (int b = 0; b < d; ++b)
      if (a.src(b) == i && a.tgt(b) == j && !r[b].is_zero()) {
        x[b] = r[b];
        any = true;
      }
    if (any) vs.push_back(std::move(x));
  }
  return {full, static_cast<int>(span_basis(vs, d).size())};
}
}  // namespace

bool FinDimAlgebra::is_split() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->split) return *cache_->split;
  }
  bool ok = true;
  for (int i = 0; i < num_idempotents() && ok; ++i) {
    auto [full, rad] = corner_dims(*this, i, i);
    if (full - rad != 1) ok = false;
  }
  if (ok) {
    const auto& cls = simple_class();
    std::vector<int> size(static_cast<size_t>(num_simples()), 0);
    for (int c : cls) ++size[c];
    int semisimple = 0;
    for (int s : size) semisimple += s * s;
    ok = semisimple == dim() - static_cast<int>(radical().size());
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->split = ok;
  return ok;
}

void FinDimAlgebra::require_split() const {
  if (!is_split())
    throw ScopeError("algebra is not split over the chosen field with the given idempotents (A/rad is not a product "
                     "of full matrix algebras matching the idempotents)");
}

const std::vector<int>& FinDimAlgebra::simple_class() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->cls) return *cache_->cls;
  }
  const int n = num_idempotents();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto [full, rad] = corner_dims(*this, j, i);
      if (full > rad) parent[find(i)] = find(j);
    }
  std::vector<int> cls(static_cast<size_t>(n), -1);
  std::map<int, int> ids;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
    cls[i] = it->second;
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->cls = cls;
  return *cache_->cls;
}

int FinDimAlgebra::num_simples() const {
  const auto& c = simple_class();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::vector<int> FinDimAlgebra::class_members(int c) const {
  std::vector<int> out;
  const auto& cls = simple_class();
  for (int i = 0; i < num_idempotents(); ++i)
    if (cls[i] == c) out.push_back(i);
  return out;
}

const std::vector<Vec>& FinDimAlgebra::generators() const {
  const auto& rad2 = radical_squared();
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gens) {
    Echelon e(dim());
    std::vector<Vec> gens;
    for (const auto& v : rad2) e.insert(v);
    for (const auto& v : idem_)
      if (e.insert(v)) gens.push_back(v);
    for (int b = 0; b < dim(); ++b)
      if (e.insert(basis_vec(b))) gens.push_back(basis_vec(b));
    cache_->gens = gens;
  }
  return *cache_->gens;
}

int FinDimAlgebra::loewy_length() const {
  std::vector<Vec> power = radical();
  int len = 1;
  while (!power.empty()) {
    power = span_basis(ideal_product(*this, power, radical()), dim());
    ++len;
  }
  return len;
}

std::string FinDimAlgebra::element_str(const Vec& x) const {
  std::ostringstream os;
  bool first = true;
  for (int b = 0; b < dim(); ++b) {
    if (x[b].is_zero()) continue;
    std::string c = x[b].str();
    bool neg = c[0] == '-';
    std::string mag = neg ? c.substr(1) : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    if (mag != "1") os << mag << "*";
    os << names_[b];
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<Vec> ideal_product(const FinDimAlgebra& a, const std::vector<Vec>& x, const std::vector<Vec>& y) {
  std::vector<Vec> out;
  for (const auto& u : x)
    for (const auto& v : y) {
      Vec p = a.mul(u, v);
      if (!is_zero(p)) out.push_back(std::move(p));
    }
  return out;
}

Vec product(const FinDimAlgebra& a, const std::vector<Vec>& xs) {
  Vec r = a.unit();
  for (const auto& x : xs) r = a.mul(r, x);
  return r;
}

namespace {

struct PathLess {
  // Descending order used for elimination: longer first, then larger arrow sequence first.
  bool operator()(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() > b.length();
    if (a.arrows != b.arrows) return a.arrows > b.arrows;
    return a.vertex > b.vertex;
  }
};

struct Block {
  std::vector<Path> paths;  // elimination order
  std::map<std::vector<int>, int> index;
  std::unique_ptr<Echelon> ech;
};

std::string path_name(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertex_name(p.vertex);
  std::string s;
  for (int a : p.arrows) s += q.arrows[a].name;
  return s;
}

}  // namespace

FinDimAlgebra build_path_algebra(const Quiver& q, const std::vector<Relation>& relations, int max_length) {
  const int n = q.n;
  if (n < 1) throw ScopeError("quiver needs at least one vertex");
  for (const auto& a : q.arrows)
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) throw ScopeError("arrow " + a.name + " has bad endpoint");
  for (size_t i = 0; i < q.arrows.size(); ++i)
    for (size_t j = i + 1; j < q.arrows.size(); ++j)
      if (q.arrows[i].name == q.arrows[j].name) throw ScopeError("duplicate arrow name " + q.arrows[i].name);

  // Uniform components of relations.
  std::vector<std::pair<std::pair<int, int>, Relation>> rels;
  for (const auto& r : relations) {
    std::map<std::pair<int, int>, Relation> parts;
    for (const auto& t : r) {
      if (t.coeff.is_zero()) continue;
      for (size_t k = 0; k + 1 < t.path.arrows.size(); ++k)
        if (q.arrows[t.path.arrows[k]].src != q.arrows[t.path.arrows[k + 1]].tgt)
          throw ScopeError("relation contains a non-composable path " + path_name(q, t.path));
      if (t.path.length() < 2)
        throw ScopeError("relation term " + path_name(q, t.path) + " has length < 2; ideal is not admissible");
      parts[{t.path.src(q), t.path.tgt(q)}].push_back(t);
    }
    for (auto& [k, v] : parts) rels.emplace_back(k, v);
  }

  for (int L = 1; L <= max_length; ++L) {
    std::vector<std::vector<Path>> levels(static_cast<size_t>(L + 1));
    for (int v = 0; v < n; ++v) levels[0].push_back(Path{v, {}});
    size_t total = n;
    for (int k = 1; k <= L; ++k) {
      for (const auto& p : levels[k - 1])
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
          if (q.arrows[a].src == p.tgt(q)) {
            Path np;
            np.arrows.push_back(a);
            np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
            levels[k].push_back(std::move(np));
          }
      total += levels[k].size();
      if (total > 40000) throw ScopeError("path space too large; quotient is not finite-dimensional at desk scale");
    }
    std::map<std::pair<int, int>, Block> blocks;
    for (const auto& lev : levels)
      for (const auto& p : lev) blocks[{p.src(q), p.tgt(q)}].paths.push_back(p);
    for (auto& [k, b] : blocks) {
      std::sort(b.paths.begin(), b.paths.end(), PathLess());
      for (size_t i = 0; i < b.paths.size(); ++i) b.index[b.paths[i].arrows] = static_cast<int>(i);
      b.ech = std::make_unique<Echelon>(static_cast<int>(b.paths.size()));
    }
    std::vector<std::pair<std::pair<int, int>, Vec>> queue;
    auto push = [&](std::pair<int, int> key, Vec v) {
      Block& b = blocks.at(key);
      if (b.ech->insert(v)) queue.emplace_back(key, std::move(v));
    };
    for (const auto& [key, r] : rels) {
      auto it = blocks.find(key);
      if (it == blocks.end()) continue;
      Vec v = zero_vec(static_cast<int>(it->second.paths.size()));
      bool any = false;
      for (const auto& t : r)
        if (t.path.length() <= L) {
          v[it->second.index.at(t.path.arrows)] += t.coeff;
          any = true;
        }
      if (any && !is_zero(v)) push(key, v);
    }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      auto key = queue[qi].first;
      Vec v = queue[qi].second;
      const Block& src_block = blocks.at(key);
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        const Arrow& ar = q.arrows[a];
        if (ar.src == key.second) {
          std::pair<int, int> nk{key.first, ar.tgt};
          Block& nb = blocks.at(nk);
          Vec w = zero_vec(static_cast<int>(nb.paths.size()));
          bool any = false;
          for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            const Path& p = src_block.paths[i];
            if (p.length() + 1 > L) continue;
            std::vector<int> arr{a};
            arr.insert(arr.end(), p.arrows.begin(), p.arrows.end());
            w[nb.index.at(arr)] += v[i];
            any = true;
          }
          if (any) push(nk, std::move(w));
        }
        if (ar.tgt == key.first) {
          std::pair<int, int> nk{ar.src, key.second};
          Block& nb = blocks.at(nk);
          Vec w = zero_vec(static_cast<int>(nb.paths.size()));
          bool any = false;
          for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            const Path& p = src_block.paths[i];
            if (p.length() + 1 > L) continue;
            std::vector<int> arr = p.arrows;
            arr.push_back(a);
            w[nb.index.at(arr)] += v[i];
            any = true;
          }
          if (any) push(nk, std::move(w));
        }
      }
    }
    bool done = true;
    for (auto& [key, b] : blocks) {
      for (size_t i = 0; i < b.paths.size() && done; ++i)
        if (b.paths[i].length() == L && !b.ech->contains(unit_vec(static_cast<int>(b.paths.size()), static_cast<int>(i))))
          done = false;
      if (!done) break;
    }
    if (!done) continue;

    // Standard monomials: paths not eliminated, i.e. not pivots of the ideal.
    std::vector<Path> basis;
    for (auto& [key, b] : blocks) {
      for (size_t i = 0; i < b.paths.size(); ++i) {
        Vec r = b.ech->reduce(unit_vec(static_cast<int>(b.paths.size()), static_cast<int>(i)));
        if (!r[i].is_zero()) basis.push_back(b.paths[i]);
      }
    }
    std::sort(basis.begin(), basis.end(), [&](const Path& x, const Path& y) {
      if (x.length() != y.length()) return x.length() < y.length();
      if (x.arrows.empty()) return x.vertex < y.vertex;
      return x.arrows < y.arrows;
    });
    const int d = static_cast<int>(basis.size());
    std::map<std::pair<std::pair<int, int>, int>, int> col_to_basis;
    for (int i = 0; i < d; ++i) {
      std::pair<int, int> key{basis[i].src(q), basis[i].tgt(q)};
      col_to_basis[{key, blocks.at(key).index.at(basis[i].arrows)}] = i;
    }
    auto normal_form = [&](const Path& p) {
      SVec out;
      if (p.length() >= L) return out;
      std::pair<int, int> key{p.src(q), p.tgt(q)};
      const Block& b = blocks.at(key);
      Vec r = b.ech->reduce(unit_vec(static_cast<int>(b.paths.size()), b.index.at(p.arrows)));
      for (size_t i = 0; i < r.size(); ++i)
        if (!r[i].is_zero()) out.add(col_to_basis.at({key, static_cast<int>(i)}), r[i]);
      return out;
    };
    std::vector<SVec> table(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Path& x = basis[i];
        const Path& y = basis[j];
        if (x.src(q) != y.tgt(q)) continue;
        if (x.arrows.empty()) {
          table[static_cast<size_t>(i) * d + j].add(j, Scalar(1));
          continue;
        }
        if (y.arrows.empty()) {
          table[static_cast<size_t>(i) * d + j].add(i, Scalar(1));
          continue;
        }
        Path p;
        p.arrows = x.arrows;
        p.arrows.insert(p.arrows.end(), y.arrows.begin(), y.arrows.end());
        table[static_cast<size_t>(i) * d + j] = normal_form(p);
      }
    std::vector<std::string> names;
    for (const auto& p : basis) names.push_back(path_name(q, p));
    std::vector<Vec> idem;
    for (int v = 0; v < n; ++v) idem.push_back(unit_vec(d, v));
    FinDimAlgebra alg(std::move(names), std::move(table), std::move(idem));
    alg.set_presentation(QuiverPresentation{q, relations, basis});
    return alg;
  }
  throw ScopeError("path length bound " + std::to_string(max_length) +
                   " exceeded without the ideal containing all paths; quotient is not finite-dimensional");
}

FinDimAlgebra opposite(const FinDimAlgebra& a) {
  const int d = a.dim();
  std::vector<SVec> table(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) table[static_cast<size_t>(i) * d + j] = a.mul(j, i);
  FinDimAlgebra op(a.names(), std::move(table), a.idempotents());
  if (a.presentation()) {
    QuiverPresentation p = *a.presentation();
    for (auto& ar : p.quiver.arrows) std::swap(ar.src, ar.tgt);
    for (auto& bp : p.basis_paths) std::reverse(bp.arrows.begin(), bp.arrows.end());
    for (auto& r : p.relations)
      for (auto& t : r) std::reverse(t.path.arrows.begin(), t.path.arrows.end());
    op.set_presentation(std::move(p));
  }
  return op;
}

bool is_invertible(const FinDimAlgebra& a, const Vec& x) { return rank(a.left_mult(x)) == a.dim(); }

std::optional<Vec> inverse_element(const FinDimAlgebra& a, const Vec& x) {
  auto y = solve(a.left_mult(x), a.unit());
  if (!y) return std::nullopt;
  if (a.mul(*y, x) != a.unit()) return std::nullopt;
  return y;
}

Polynomial linear_map_char_poly(const Matrix& f) { return char_poly(f); }

std::vector<Vec> SubalgebraEmbedding::image_span() const {
  std::vector<Vec> out;
  for (int b = 0; b < sub->dim(); ++b) out.push_back(image_basis(b));
  return out;
}

void SubalgebraEmbedding::verify(bool unital) const {
  if (map.rows() != amb->dim() || map.cols() != sub->dim()) throw VerificationError("embedding has wrong shape");
  if (rank(map) != sub->dim()) throw VerificationError("embedding is not injective");
  for (int i = 0; i < sub->dim(); ++i)
    for (int j = 0; j < sub->dim(); ++j) {
      Vec lhs = image(sub->mul(sub->basis_vec(i), sub->basis_vec(j)));
      Vec rhs = amb->mul(image_basis(i), image_basis(j));
      if (lhs != rhs) throw VerificationError("embedding is not multiplicative on (" + sub->name(i) + ", " + sub->name(j) + ")");
    }
  Vec u = image(sub->unit());
  if (unital ? u != amb->unit() : amb->mul(u, u) != u) throw VerificationError("embedding does not preserve the unit");
}

SubalgebraEmbedding subalgebra_from_span(const AlgebraPtr& amb, const std::vector<Vec>& span,
                                         const std::vector<Vec>& sub_idem, std::vector<std::string> names) {
  const int d = amb->dim();
  std::vector<Vec> basis;
  std::vector<std::pair<int, int>> tags;
  const int m = static_cast<int>(sub_idem.size());
  for (int i = 0; i < m; ++i) {
    basis.push_back(sub_idem[i]);
    tags.emplace_back(i, i);
  }
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      std::vector<Vec> vs;
      for (const auto& s : span) vs.push_back(amb->mul(amb->mul(sub_idem[j], s), sub_idem[i]));
      Echelon e(d);
      if (i == j) e.insert(sub_idem[i]);
      for (const auto& v : vs)
        if (e.insert(v)) {
          basis.push_back(v);
          tags.emplace_back(i, j);
        }
    }
  if (!same_span(basis, span, d)) throw VerificationError("subalgebra idempotents do not decompose the span");
  const int k = static_cast<int>(basis.size());
  Echelon coords(d);
  for (const auto& v : basis) coords.insert(v);
  std::vector<SVec> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (tags[i].first != tags[j].second) continue;
      Vec p = amb->mul(basis[i], basis[j]);
      if (is_zero(p)) continue;
      auto c = coords.coordinates(p);
      if (!c) throw VerificationError("span is not closed under multiplication");
      table[static_cast<size_t>(i) * k + j] = SVec::from_dense(*c);
    }
  if (names.size() != static_cast<size_t>(k)) {
    names.clear();
    for (int i = 0; i < k; ++i) names.push_back(i < m ? "e" + std::to_string(i + 1) : "s" + std::to_string(i + 1));
  }
  std::vector<Vec> idem;
  for (int i = 0; i < m; ++i) idem.push_back(unit_vec(k, i));
  auto sub = std::make_shared<FinDimAlgebra>(std::move(names), std::move(table), std::move(idem));
  SubalgebraEmbedding emb{sub, amb, Matrix::from_cols(basis, d)};
  emb.verify(is_zero(emb.image(sub->unit()) - amb->unit()));
  return emb;
}

SubalgebraEmbedding subalgebra_closure(const AlgebraPtr& a, const std::vector<Vec>& gens,
                                       std::vector<std::string> names) {
  const int d = a->dim();
  Echelon e(d);
  std::vector<Vec> span;
  auto add = [&](const Vec& v) {
    if (e.insert(v)) span.push_back(v);
  };
  add(a->unit());
  for (const auto& g : gens) add(g);
  for (size_t i = 0; i < span.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      add(a->mul(span[i], span[j]));
      add(a->mul(span[j], span[i]));
      if (static_cast<int>(span.size()) > d) throw VerificationError("closure exceeded ambient dimension");
    }
  std::vector<Vec> idem;
  for (const auto& g : gens)
    if (!is_zero(g) && a->mul(g, g) == g) idem.push_back(g);
  bool orth = true;
  for (size_t i = 0; i < idem.size() && orth; ++i)
    for (size_t j = 0; j < idem.size(); ++j)
      if (i != j && !is_zero(a->mul(idem[i], idem[j]))) orth = false;
  if (!orth || idem.empty()) {
    idem = {a->unit()};
  } else {
    Vec rest = a->unit();
    for (const auto& x : idem) rest = rest - x;
    if (!is_zero(rest)) idem.push_back(rest);
  }
  return subalgebra_from_span(a, span, idem, std::move(names));
}

namespace {

// Products of generators spanning B: generator lists are idempotents then arrows.
struct WordBasis {
  std::vector<std::vector<int>> words;
  Matrix inverse;
};

WordBasis word_basis(const FinDimAlgebra& b, const std::vector<ArrowGenerator>& arrows) {
  const int d = b.dim(), m = b.num_idempotents();
  WordBasis wb;
  Echelon e(d);
  std::vector<Vec> vecs;
  std::vector<std::pair<std::vector<int>, Vec>> frontier;
  for (int i = 0; i < m; ++i)
    if (e.insert(b.idempotent(i))) {
      wb.words.push_back({i});
      vecs.push_back(b.idempotent(i));
    }
  for (size_t a = 0; a < arrows.size(); ++a) frontier.push_back({{m + static_cast<int>(a)}, arrows[a].v});
  while (!frontier.empty() && e.dim() < d) {
    std::vector<std::pair<std::vector<int>, Vec>> next;
    for (auto& [w, v] : frontier) {
      if (e.insert(v)) {
        wb.words.push_back(w);
        vecs.push_back(v);
      }
      for (size_t a = 0; a < arrows.size(); ++a) {
        Vec p = b.mul(v, arrows[a].v);
        if (is_zero(p)) continue;
        auto nw = w;
        nw.push_back(m + static_cast<int>(a));
        next.push_back({std::move(nw), std::move(p)});
      }
    }
    frontier = std::move(next);
  }
  if (e.dim() < d) throw ScopeError("arrow generators do not generate the subalgebra");
  wb.inverse = *inverse(Matrix::from_cols(vecs, d));
  return wb;
}

}  // namespace

std::vector<ArrowGenerator> arrow_generators(const FinDimAlgebra& b) {
  std::vector<ArrowGenerator> out;
  const int d = b.dim();
  for (int i = 0; i < b.num_idempotents(); ++i)
    for (int j = 0; j < b.num_idempotents(); ++j) {
      auto c = b.corner(b.idempotent(j), b.idempotent(i));
      if (c.empty()) continue;
      auto r = subspace_intersection(c, b.radical(), d);
      auto r2 = subspace_intersection(c, b.radical_squared(), d);
      for (auto& v : quotient_complement(r, r2, d)) out.push_back({i, j, v});
    }
  return out;
}

std::optional<Matrix> extend_to_isomorphism(const FinDimAlgebra& b, const std::vector<ArrowGenerator>& arrows,
                                           const FinDimAlgebra& b2, const std::vector<Vec>& gen_images) {
  const int d = b.dim();
  if (b2.dim() != d) return std::nullopt;
  WordBasis wb = word_basis(b, arrows);
  std::vector<Vec> imgs;
  for (const auto& w : wb.words) {
    Vec p = gen_images[w[0]];
    for (size_t k = 1; k < w.size(); ++k) p = b2.mul(p, gen_images[w[k]]);
    imgs.push_back(std::move(p));
  }
  Matrix phi = Matrix::from_cols(imgs, b2.dim()) * wb.inverse;
  if (rank(phi) != d) return std::nullopt;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec lhs = phi.apply(b.mul(i, j).dense(d));
      Vec rhs = b2.mul(phi.col(i), phi.col(j));
      if (lhs != rhs) return std::nullopt;
    }
  return phi;
}


}  // namespace qha

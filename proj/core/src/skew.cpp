#include "qha/skew.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "qha/errors.hpp"

namespace qha {

int FiniteGroup::identity() const {
  for (int g = 0; g < order(); ++g) {
    bool id = true;
    for (int h = 0; h < order() && id; ++h)
      if (mul[g][h] != h) id = false;
    if (id) return g;
  }
  throw VerificationError("group has no identity");
}

int FiniteGroup::inverse(int g) const {
  const int e = identity();
  for (int h = 0; h < order(); ++h)
    if (mul[g][h] == e) return h;
  throw VerificationError("group element without inverse");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ScopeError("cyclic group needs positive order");
  FiniteGroup g;
  for (int k = 0; k < n; ++k) g.names.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
  g.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  if (n > 1) g.generators = {1};
  return g;
}

void GroupAction::verify() const {
  const int n = group.order();
  const Field& f = Field::current();
  if (!f.is_rational() && n % static_cast<long>(f.characteristic()) == 0)
    throw ScopeError("characteristic divides the group order");
  if (static_cast<int>(maps.size()) != n) throw VerificationError("action needs one map per group element");
  const FinDimAlgebra& a = *alg;
  const int d = a.dim();
  for (int g = 0; g < n; ++g) {
    if (rank(maps[g]) != d) throw VerificationError("action map of " + group.names[g] + " is not bijective");
    if (maps[g].apply(a.unit()) != a.unit()) throw VerificationError("action of " + group.names[g] + " moves the unit");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (maps[g].apply(a.mul(i, j).dense(d)) != a.mul(maps[g].col(i), maps[g].col(j)))
          throw VerificationError("action of " + group.names[g] + " is not multiplicative");
  }
  if (maps[group.identity()] != Matrix::identity(d)) throw VerificationError("identity acts nontrivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (maps[g] * maps[h] != maps[group.mul[g][h]]) throw VerificationError("action violates the group law");
}

GroupAction cyclic_action(const AlgebraPtr& a, const Matrix& generator, int n) {
  GroupAction act{FiniteGroup::cyclic(n), a, {}};
  Matrix m = Matrix::identity(a->dim());
  for (int k = 0; k < n; ++k) {
    act.maps.push_back(m);
    m = generator * m;
  }
  if (m != Matrix::identity(a->dim())) throw VerificationError("generator order does not divide the group order");
  act.verify();
  return act;
}

GroupAction trivial_action(const AlgebraPtr& a, const FiniteGroup& g) {
  GroupAction act{g, a, std::vector<Matrix>(static_cast<size_t>(g.order()), Matrix::identity(a->dim()))};
  return act;
}

std::string cocycle_defect(const GroupAction& act, const Cocycle& c) {
  const FinDimAlgebra& a = *act.alg;
  const int n = act.group.order();
  if (static_cast<int>(c.rho.size()) != n) return "cocycle needs one unit per group element";
  if (c.rho[act.group.identity()] != a.unit()) return "rho(1) is not the unit";
  for (int g = 0; g < n; ++g)
    if (!is_invertible(a, c.rho[g])) return "rho(" + act.group.names[g] + ") is not invertible";
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (c.rho[act.group.mul[g][h]] != a.mul(c.rho[g], act.apply(g, c.rho[h])))
        return "rho(gh) = rho(g) g(rho(h)) fails for g = " + act.group.names[g] + ", h = " + act.group.names[h];
  return "";
}

Cocycle cyclic_cocycle(const GroupAction& act, const Vec& rho_g) {
  const int n = act.group.order();
  Cocycle c;
  c.rho.push_back(act.alg->unit());
  for (int k = 1; k < n; ++k) c.rho.push_back(act.alg->mul(c.rho.back(), act.apply(k - 1, rho_g)));
  return c;
}

FinDimAlgebra skew_group_algebra(const GroupAction& act) {
  act.verify();
  const FinDimAlgebra& a = *act.alg;
  const int d = a.dim(), n = act.group.order(), D = d * n;
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i)
    for (int g = 0; g < n; ++g) names.push_back(a.name(i) + "#" + act.group.names[g]);
  std::vector<SVec> table(static_cast<size_t>(D) * D);
  for (int i = 0; i < d; ++i)
    for (int g = 0; g < n; ++g)
      for (int j = 0; j < d; ++j) {
        Vec gj = act.maps[g].col(j);
        Vec prod = a.mul(a.basis_vec(i), gj);
        for (int h = 0; h < n; ++h) {
          SVec sv;
          const int gh = act.group.mul[g][h];
          for (int k = 0; k < d; ++k)
            if (!prod[k].is_zero()) sv.add(k * n + gh, prod[k]);
          sv.canonicalize();
          table[static_cast<size_t>(i * n + g) * D + (j * n + h)] = sv;
        }
      }
  std::vector<Vec> idem;
  const int e = act.group.identity();
  for (const auto& v : a.idempotents()) {
    Vec w = zero_vec(D);
    for (int k = 0; k < d; ++k) w[k * n + e] = v[k];
    idem.push_back(w);
  }
  FinDimAlgebra out(std::move(names), std::move(table), std::move(idem));
  out.verify_associative();
  return out;
}

std::vector<int> simple_permutation(const GroupAction& act, int g) {
  const FinDimAlgebra& a = *act.alg;
  std::vector<int> perm;
  for (int c = 0; c < a.num_simples(); ++c) {
    Vec e = act.apply(g, a.idempotent(a.class_members(c).front()));
    auto top = top_multiplicities(projective_module(act.alg, e));
    int found = -1;
    for (size_t k = 0; k < top.size(); ++k)
      if (top[k] == 1 && found < 0)
        found = static_cast<int>(k);
      else if (top[k] != 0)
        found = -2;
    if (found < 0) throw VerificationError("action does not map primitive idempotents to primitive idempotents");
    perm.push_back(found);
  }
  return perm;
}

bool check_invariant_order(const GroupAction& act, const SimpleOrder& order) {
  const int n = act.group.order();
  std::vector<std::vector<int>> perms;
  for (int g = 0; g < n; ++g) perms.push_back(simple_permutation(act, g));
  const int s = order.size();
  for (int l = 0; l < s; ++l)
    for (int l2 = 0; l2 < s; ++l2)
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
          if (order.less(l, l2) != order.less(perms[g][l], perms[h][l2])) return false;
  return true;
}

GroupAction twist_action(const GroupAction& act, const Cocycle& c) {
  auto defect = cocycle_defect(act, c);
  if (!defect.empty()) throw VerificationError("cocycle defect: " + defect);
  const FinDimAlgebra& a = *act.alg;
  GroupAction out{act.group, act.alg, {}};
  for (int g = 0; g < act.group.order(); ++g) {
    Vec inv = *inverse_element(a, c.rho[g]);
    out.maps.push_back(a.left_mult(c.rho[g]) * a.right_mult(inv) * act.maps[g]);
  }
  out.verify();
  return out;
}

std::vector<Polynomial> action_char_polys(const GroupAction& act) {
  std::vector<Polynomial> out;
  for (const auto& m : act.maps) out.push_back(char_poly(m));
  return out;
}

std::vector<Scalar> group_roots(const GroupAction& act) {
  const int n = act.group.order();
  const Field& f = Field::current();
  std::vector<Scalar> out;
  if (f.is_rational()) {
    out.push_back(Scalar(1));
    if (n % 2 == 0) out.push_back(Scalar(-1));
    return out;
  }
  const std::uint64_t p = f.characteristic();
  if (p > 2000000) throw ScopeError("roots of unity search is bounded to p <= 2000000");
  for (std::uint64_t x = 1; x < p; ++x) {
    Scalar s(static_cast<long>(x));
    if (s.pow(n).is_one()) out.push_back(s);
  }
  return out;
}

// ---- polynomial elimination for the cocycle equations ----

namespace {

using Exps = std::vector<int>;

struct MPoly {
  std::map<Exps, Scalar> t;
  int nv = 0;

  static MPoly constant(int nv, const Scalar& c) {
    MPoly p;
    p.nv = nv;
    if (!c.is_zero()) p.t[Exps(static_cast<size_t>(nv), 0)] = c;
    return p;
  }
  static MPoly var(int nv, int k) {
    MPoly p;
    p.nv = nv;
    Exps e(static_cast<size_t>(nv), 0);
    e[k] = 1;
    p.t[e] = Scalar(1);
    return p;
  }
  bool is_zero() const { return t.empty(); }
  bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first == Exps(static_cast<size_t>(nv), 0)); }
  Scalar constant_term() const {
    auto it = t.find(Exps(static_cast<size_t>(nv), 0));
    return it == t.end() ? Scalar(0) : it->second;
  }
  void add_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
  MPoly operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.t) r.add_term(e, c);
    return r;
  }
  MPoly scaled(const Scalar& s) const {
    MPoly r;
    r.nv = nv;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t) r.t.emplace(e, c * s);
    return r;
  }
  MPoly operator-(const MPoly& o) const { return *this + o.scaled(Scalar(-1)); }
  MPoly operator*(const MPoly& o) const {
    MPoly r;
    r.nv = nv;
    for (const auto& [e1, c1] : t)
      for (const auto& [e2, c2] : o.t) {
        Exps e = e1;
        for (int k = 0; k < nv; ++k) e[k] += e2[k];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  int degree_in(int v) const {
    int d = 0;
    for (const auto& [e, c] : t) d = std::max(d, e[v]);
    return d;
  }
  std::vector<int> vars() const {
    std::vector<int> out;
    for (int k = 0; k < nv; ++k)
      if (degree_in(k) > 0) out.push_back(k);
    return out;
  }
  // Coefficient of x_v^k as a polynomial in the remaining variables.
  MPoly coefficient(int v, int k) const {
    MPoly r;
    r.nv = nv;
    for (const auto& [e, c] : t)
      if (e[v] == k) {
        Exps f = e;
        f[v] = 0;
        r.add_term(f, c);
      }
    return r;
  }
  MPoly substitute(int v, const MPoly& val) const {
    MPoly r;
    r.nv = nv;
    std::vector<MPoly> pw{constant(nv, Scalar(1))};
    for (const auto& [e, c] : t) {
      while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * val);
      Exps f = e;
      f[v] = 0;
      MPoly term;
      term.nv = nv;
      term.t[f] = c;
      r = r + term * pw[e[v]];
    }
    return r;
  }
  // p / x_v when every term contains x_v.
  std::optional<MPoly> divide_var(int v) const {
    MPoly r;
    r.nv = nv;
    for (const auto& [e, c] : t) {
      if (e[v] == 0) return std::nullopt;
      Exps f = e;
      --f[v];
      r.t[f] = c;
    }
    return r;
  }
  Scalar eval(const std::vector<Scalar>& x) const {
    Scalar s(0);
    for (const auto& [e, c] : t) {
      Scalar m = c;
      for (int k = 0; k < nv; ++k)
        if (e[k]) m *= x[k].pow(e[k]);
      s += m;
    }
    return s;
  }
  std::string str(const std::vector<std::string>& names) const {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (int k = 0; k < nv; ++k)
        if (e[k]) mono += (mono.empty() ? "" : "*") + names[k] + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
      std::string cs = c.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
      if (first)
        out += (neg ? "-" : "") + term;
      else
        out += (neg ? " - " : " + ") + term;
      first = false;
    }
    return out;
  }
};

using Assignment = std::vector<std::optional<MPoly>>;

struct Eliminator {
  int budget = 20000;
  bool complete = true;
  std::vector<Assignment> solutions;

  static std::optional<std::vector<Scalar>> roots(const MPoly& p, int v) {
    const int d = p.degree_in(v);
    std::vector<Scalar> c;
    for (int k = 0; k <= d; ++k) c.push_back(p.coefficient(v, k).constant_term());
    std::vector<Scalar> out;
    const Field& f = Field::current();
    if (d == 2) {
      Scalar disc = c[1] * c[1] - Scalar(4) * c[2] * c[0];
      auto s = disc.sqrt();
      if (!s) return out;
      Scalar den = Scalar(2) * c[2];
      out.push_back((-c[1] + *s) / den);
      if (!s->is_zero()) out.push_back((-c[1] - *s) / den);
      return out;
    }
    if (!f.is_rational() && f.characteristic() <= 200000) {
      for (std::uint64_t x = 0; x < f.characteristic(); ++x) {
        Scalar s(static_cast<long>(x));
        Scalar val(0);
        for (int k = d; k >= 0; --k) val = val * s + c[k];
        if (val.is_zero()) out.push_back(s);
      }
      return out;
    }
    return std::nullopt;
  }

  void assign(std::vector<MPoly>& eqs, Assignment& a, int v, const MPoly& val) {
    for (auto& e : eqs) e = e.substitute(v, val);
    for (auto& x : a)
      if (x) x = x->substitute(v, val);
    a[v] = val;
  }

  void run(std::vector<MPoly> eqs, Assignment a) {
    if (--budget < 0) {
      complete = false;
      return;
    }
    std::vector<MPoly> kept;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) return;
      kept.push_back(std::move(e));
    }
    eqs = std::move(kept);
    if (eqs.empty()) {
      solutions.push_back(std::move(a));
      return;
    }
    // linear in a variable with constant coefficient
    for (const auto& e : eqs)
      for (int v : e.vars()) {
        if (e.degree_in(v) != 1) continue;
        MPoly c = e.coefficient(v, 1);
        if (!c.is_constant()) continue;
        MPoly val = e.coefficient(v, 0).scaled(-(c.constant_term().inv()));
        assign(eqs, a, v, val);
        run(std::move(eqs), std::move(a));
        return;
      }
    // univariate
    for (const auto& e : eqs) {
      auto vs = e.vars();
      if (vs.size() != 1) continue;
      auto rs = roots(e, vs[0]);
      if (!rs) continue;
      for (const auto& r : *rs) {
        auto eq2 = eqs;
        auto a2 = a;
        assign(eq2, a2, vs[0], MPoly::constant(e.nv, r));
        run(std::move(eq2), std::move(a2));
      }
      return;
    }
    // a variable dividing an equation
    for (size_t i = 0; i < eqs.size(); ++i)
      for (int v : eqs[i].vars()) {
        auto q = eqs[i].divide_var(v);
        if (!q) continue;
        auto eq2 = eqs;
        auto a2 = a;
        assign(eq2, a2, v, MPoly::constant(eqs[i].nv, Scalar(0)));
        run(std::move(eq2), std::move(a2));
        eqs[i] = *q;
        run(std::move(eqs), std::move(a));
        return;
      }
    complete = false;
  }
};

// Equations x g(x) g^2(x) ... = 1 for x = sum_k t_k v_k; pw holds g, g^2, ...
std::vector<MPoly> norm_equations(const FinDimAlgebra& a, const std::vector<Matrix>& pw, const std::vector<Vec>& V) {
  const int n = a.dim(), m = static_cast<int>(V.size());
  std::vector<MPoly> r(static_cast<size_t>(n), MPoly::constant(m, Scalar(0)));
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i)
      if (!V[k][i].is_zero()) r[i] = r[i] + MPoly::var(m, k).scaled(V[k][i]);
  std::vector<MPoly> prod = r;
  for (const auto& gj : pw) {
    std::vector<MPoly> gr(static_cast<size_t>(n), MPoly::constant(m, Scalar(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (!gj(i, k).is_zero() && !r[k].is_zero()) gr[i] = gr[i] + r[k].scaled(gj(i, k));
    std::vector<MPoly> next(static_cast<size_t>(n), MPoly::constant(m, Scalar(0)));
    for (int x = 0; x < n; ++x) {
      if (prod[x].is_zero()) continue;
      for (int y = 0; y < n; ++y) {
        if (gr[y].is_zero()) continue;
        const SVec& xy = a.mul(x, y);
        if (xy.empty()) continue;
        MPoly pq = prod[x] * gr[y];
        for (const auto& [z, c] : xy.e) next[z] = next[z] + pq.scaled(c);
      }
    }
    prod = std::move(next);
  }
  std::vector<MPoly> eqs;
  for (int i = 0; i < n; ++i) eqs.push_back(prod[i] - MPoly::constant(m, a.unit()[i]));
  return eqs;
}

std::string matrix_key(const Matrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += m(i, j).str() + ",";
  return s;
}

}  // namespace

TwistClassification classify_compatible_twists(const GroupAction& act, const SubalgebraEmbedding& b) {
  act.verify();
  if (act.group.generators.size() != 1 && act.group.order() > 1)
    throw ScopeError("twist classification supports cyclic groups given by FiniteGroup::cyclic");
  const int N = act.group.order();
  if (N > 6) throw ScopeError("twist classification is bounded to |G| <= 6");
  const FinDimAlgebra& a = *act.alg;
  const FinDimAlgebra& s = *b.sub;
  const int n = a.dim();
  if (n > 32) throw ScopeError("twist classification is bounded to dim <= 32");
  TwistClassification out;
  if (N == 1) {
    TwistFamily f;
    f.representative = a.unit();
    f.sample = a.unit();
    f.char_polys = action_char_polys(act);
    out.families.push_back(f);
    return out;
  }
  auto gens = arrow_generators(s);
  auto mu = group_roots(act);
  const int na = static_cast<int>(gens.size());
  double count = 1;
  for (int k = 0; k < na; ++k) count *= static_cast<double>(mu.size());
  if (count > 4096) throw ScopeError("too many arrow rescalings to enumerate");
  const Matrix& g = act.maps[1];
  std::map<std::string, bool> seen;
  // Adds the family sum_k x_k basis[k] for one solution branch; returns its representative.
  auto add_family = [&](const Assignment& sol, const std::vector<Vec>& basis,
                        const std::vector<Scalar>& sc) -> std::optional<Vec> {
    const int m = static_cast<int>(basis.size());
    std::vector<int> free;
    for (int k = 0; k < m; ++k)
      if (!sol[k]) free.push_back(k);
    std::vector<MPoly> coord(static_cast<size_t>(n), MPoly::constant(m, Scalar(0)));
    for (int k = 0; k < m; ++k) {
      MPoly xk = sol[k] ? *sol[k] : MPoly::var(m, k);
      for (int i = 0; i < n; ++i)
        if (!basis[k][i].is_zero()) coord[i] = coord[i] + xk.scaled(basis[k][i]);
    }
    auto eval_at = [&](const Scalar& val) {
      std::vector<Scalar> x(static_cast<size_t>(m), Scalar(0));
      for (int k : free) x[k] = val;
      Vec v = zero_vec(n);
      for (int i = 0; i < n; ++i) v[i] = coord[i].eval(x);
      return v;
    };
    std::vector<Vec> pts;
    for (long t : {0L, 1L, 2L, -1L, 3L, -2L}) {
      Vec v = eval_at(Scalar(t));
      if (is_invertible(a, v)) pts.push_back(v);
      if (pts.size() == 2 || free.empty()) break;
    }
    if (pts.empty()) return std::nullopt;
    TwistFamily f;
    f.arrow_scalars = sc;
    f.parameters = static_cast<int>(free.size());
    f.representative = pts[0];
    f.sample = pts.back();
    auto twisted_generator = [&](const Vec& rho) {
      return a.left_mult(rho) * a.right_mult(*inverse_element(a, rho)) * g;
    };
    std::string key = matrix_key(twisted_generator(f.representative)) + "|" + matrix_key(twisted_generator(f.sample));
    if (seen.count(key)) return f.representative;
    seen[key] = true;
    GroupAction t0 = twist_action(act, cyclic_cocycle(act, f.representative));
    GroupAction t1 = twist_action(act, cyclic_cocycle(act, f.sample));
    f.char_polys = action_char_polys(t0);
    if (action_char_polys(t1) != f.char_polys) out.note += "char polys vary within a family; ";
    std::vector<std::string> pnames(static_cast<size_t>(m));
    for (size_t k = 0; k < free.size(); ++k) pnames[free[k]] = "l" + std::to_string(k + 1);
    std::string formula;
    for (int i = 0; i < n; ++i) {
      if (coord[i].is_zero()) continue;
      std::string c = coord[i].str(pnames);
      std::string term = c == "1" ? a.name(i) : (c == "-1" ? "-" + a.name(i) : "(" + c + ")*" + a.name(i));
      if (!formula.empty())
        formula += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
      else
        formula = term;
    }
    f.formula = formula;
    out.families.push_back(std::move(f));
    return out.families.back().representative;
  };
  for (long idx = 0; idx < static_cast<long>(count); ++idx) {
    long rest = idx;
    std::vector<Scalar> sc;
    for (int k = 0; k < na; ++k) {
      sc.push_back(mu[rest % static_cast<long>(mu.size())]);
      rest /= static_cast<long>(mu.size());
    }
    std::vector<Vec> images(s.idempotents().begin(), s.idempotents().end());
    for (int k = 0; k < na; ++k) images.push_back(scaled(gens[k].v, sc[k]));
    auto psi = extend_to_isomorphism(s, gens, s, images);
    if (!psi) continue;
    Matrix sys(0, n);
    for (int k = 0; k < s.dim(); ++k)
      sys = vstack(sys, a.right_mult(g.apply(b.image_basis(k))) - a.left_mult(b.image(psi->col(k))));
    auto V = kernel_basis(sys);
    const int m = static_cast<int>(V.size());
    if (m == 0) continue;
    if (m > 12) {
      out.complete = false;
      out.note += "solution space of dimension " + std::to_string(m) + " skipped; ";
      continue;
    }
    std::vector<Matrix> pw(act.maps.begin() + 1, act.maps.end());
    Eliminator el;
    el.run(norm_equations(a, pw, V), Assignment(static_cast<size_t>(m)));
    if (!el.complete) {
      out.complete = false;
      out.note += "elimination exceeded its bounds for one rescaling; ";
    }
    std::vector<Vec> reps;
    for (const auto& sol : el.solutions)
      if (auto r0 = add_family(sol, V, sc)) reps.push_back(*r0);
    // rho -> iota(w) rho with w psi(w) ... psi^{N-1}(w) = 1 keeps g * B = B
    const int db = s.dim();
    if (db > 12) continue;
    std::vector<Matrix> ppw;
    Matrix pp = *psi;
    for (int j = 1; j < N; ++j) {
      ppw.push_back(pp);
      pp = *psi * pp;
    }
    std::vector<Vec> ub;
    for (int k = 0; k < db; ++k) ub.push_back(unit_vec(db, k));
    Eliminator ew;
    ew.run(norm_equations(s, ppw, ub), Assignment(static_cast<size_t>(db)));
    if (!ew.complete) {
      out.complete = false;
      out.note += "elimination exceeded its bounds for units of the subalgebra; ";
    }
    for (const auto& r0 : reps) {
      std::vector<Vec> W;
      for (int k = 0; k < db; ++k) W.push_back(a.mul(b.image_basis(k), r0));
      for (const auto& sol : ew.solutions) add_family(sol, W, sc);
    }
  }
  return out;
}

std::string verdict_str(ObstructionResult::Verdict v) {
  switch (v) {
    case ObstructionResult::Verdict::exists:
      return "exists";
    case ObstructionResult::Verdict::obstructed:
      return "obstructed";
    default:
      return "undetermined";
  }
}

namespace {

bool invariant_subalgebra(const GroupAction& act, const std::vector<Vec>& span) {
  const int n = act.alg->dim();
  for (int g = 0; g < act.group.order(); ++g) {
    std::vector<Vec> img;
    for (const auto& v : span) img.push_back(act.apply(g, v));
    if (!same_span(img, span, n)) return false;
  }
  return true;
}

}  // namespace

ObstructionResult invariant_borel_obstruction(const GroupAction& act, const SubalgebraEmbedding& b) {
  ObstructionResult res;
  const FinDimAlgebra& a = *act.alg;
  const int n = a.dim();
  res.base_polys = action_char_polys(act);
  res.twists = classify_compatible_twists(act, b);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  bool matched = false;
  for (const auto& f : res.twists.families) {
    if (f.char_polys != res.base_polys) continue;
    matched = true;
    const int N = act.group.order();
    // u = rho(g) g(u): then u^{-1} B u is invariant
    Matrix sys = N == 1 ? Matrix(0, n) : Matrix::identity(n) - a.left_mult(f.representative) * act.maps[1];
    auto ker = N == 1 ? std::vector<Vec>{a.unit()} : kernel_basis(sys);
    for (int t = 0; t < 64 && !ker.empty(); ++t) {
      Vec u = zero_vec(n);
      for (const auto& v : ker) axpy(u, Scalar(t == 0 ? 1 : coef(rng)), v);
      auto ui = inverse_element(a, u);
      if (!ui) continue;
      std::vector<Vec> span;
      for (int k = 0; k < b.sub->dim(); ++k) span.push_back(a.mul(a.mul(*ui, b.image_basis(k)), u));
      if (!invariant_subalgebra(act, span)) continue;
      res.verdict = ObstructionResult::Verdict::exists;
      res.witness = *ui;
      res.note = "invariant conjugate w B w^{-1} found";
      return res;
    }
  }
  if (!matched && res.twists.complete) {
    res.verdict = ObstructionResult::Verdict::obstructed;
    res.note = "no compatible twist has the characteristic polynomials of the given action; the search covers this algebra only, not Morita-equivalent ones";
  } else {
    res.verdict = ObstructionResult::Verdict::undetermined;
    res.note = matched ? "matching twist without a conjugating unit" : "twist classification incomplete";
  }
  return res;
}

bool equivariance_check(const SubalgebraEmbedding& iota, const GroupAction& on_sub, const GroupAction& on_amb) {
  if (on_sub.group.order() != on_amb.group.order()) return false;
  for (int g = 0; g < on_sub.group.order(); ++g)
    for (int k = 0; k < iota.sub->dim(); ++k)
      if (iota.image(on_sub.apply(g, iota.sub->basis_vec(k))) != on_amb.apply(g, iota.image_basis(k))) return false;
  return true;
}

}  // namespace qha

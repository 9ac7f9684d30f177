#include "qha/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qha {

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Scalar(0)); }

Vec unit_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec& axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return y;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].add_mul(a, x[i]);
  return y;
}

Vec scaled(const Vec& v, const Scalar& a) {
  Vec out = v;
  for (auto& x : out) x *= a;
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec out = a;
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

void SVec::add(int i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, int k) { return p.first < k; });
  if (it != e.end() && it->first == i) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  } else {
    e.insert(it, {i, c});
  }
}

void SVec::add(const SVec& o, const Scalar& c) {
  if (c.is_zero() || o.e.empty()) return;
  std::vector<std::pair<int, Scalar>> out;
  out.reserve(e.size() + o.e.size());
  size_t i = 0, j = 0;
  while (i < e.size() || j < o.e.size()) {
    if (j == o.e.size() || (i < e.size() && e[i].first < o.e[j].first)) {
      out.push_back(e[i++]);
    } else if (i == e.size() || o.e[j].first < e[i].first) {
      out.emplace_back(o.e[j].first, o.e[j].second * c);
      ++j;
    } else {
      Scalar s = e[i].second;
      s.add_mul(o.e[j].second, c);
      if (!s.is_zero()) out.emplace_back(e[i].first, s);
      ++i;
      ++j;
    }
  }
  e.swap(out);
}

void SVec::canonicalize() {
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Scalar>> out;
  for (auto& p : e) {
    if (!out.empty() && out.back().first == p.first) out.back().second += p.second;
    else out.push_back(p);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second.is_zero(); }), out.end());
  e.swap(out);
}

Scalar SVec::get(int i) const {
  auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, int k) { return p.first < k; });
  return (it != e.end() && it->first == i) ? it->second : Scalar(0);
}

Vec SVec::dense(int n) const {
  Vec v = zero_vec(n);
  for (const auto& [i, c] : e) v[i] = c;
  return v;
}

SVec SVec::from_dense(const Vec& v) {
  SVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.e.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

bool SVec::operator==(const SVec& o) const {
  if (e.size() != o.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i].first != o.e[i].first || e[i].second != o.e[i].second) return false;
  return true;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("row length mismatch");
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(int i) const { return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }

Vec Matrix::col(int j) const {
  Vec v(static_cast<size_t>(r_));
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  Vec out = zero_vec(r_);
  for (int j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < r_; ++i)
      if (!(*this)(i, j).is_zero()) out[i].add_mul((*this)(i, j), v[j]);
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Scalar Matrix::trace() const {
  Scalar t(0);
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("dimension mismatch in matrix product");
  Matrix out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j)
        if (!o(k, j).is_zero()) out(i, j).add_mul(a, o(k, j));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("dimension mismatch in matrix sum");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("dimension mismatch in matrix difference");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.a_) x *= s;
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Rref rref(const Matrix& input) {
  Rref res;
  res.m = input;
  Matrix& m = res.m;
  const int R = m.rows(), C = m.cols();
  int row = 0;
  std::vector<int> nz;
  for (int c = 0; c < C && row < R; ++c) {
    int p = -1;
    for (int i = row; i < R; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = c; j < C; ++j) std::swap(m(p, j), m(row, j));
    Scalar inv = m(row, c).inv();
    nz.clear();
    for (int j = c; j < C; ++j)
      if (!m(row, j).is_zero()) {
        m(row, j) *= inv;
        nz.push_back(j);
      }
    for (int i = 0; i < R; ++i) {
      if (i == row || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j : nz) m(i, j).sub_mul(f, m(row, j));
    }
    res.pivots.push_back(c);
    ++row;
  }
  res.rank = row;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  const int C = m.cols();
  std::vector<char> is_piv(static_cast<size_t>(C), 0);
  for (int p : r.pivots) is_piv[p] = 1;
  std::vector<Vec> out;
  for (int f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    Vec v = zero_vec(C);
    v[f] = Scalar(1);
    for (int k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.m(k, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (int i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (int k = 0; k < r.rank; ++k) x[r.pivots[k]] = r.m(k, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  Rref r = rref(hstack(m, Matrix::identity(n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  return r.m.block(0, n, n, n);
}

Scalar det(const Matrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = input;
  const int n = m.rows();
  Scalar d(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = m(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j).sub_mul(f, m(c, j));
    }
  }
  return d;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs, int n) {
  if (vs.empty()) return {};
  Rref r = rref(Matrix::from_rows(vs, n));
  std::vector<Vec> out;
  for (int k = 0; k < r.rank; ++k) out.push_back(r.m.row(k));
  return out;
}

std::vector<Vec> subspace_sum(const std::vector<Vec>& a, const std::vector<Vec>& b, int n) {
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_basis(all, n);
}

std::vector<Vec> subspace_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b, int n) {
  std::vector<Vec> ab = span_basis(a, n), bb = span_basis(b, n);
  if (ab.empty() || bb.empty()) return {};
  // Solve x*A = y*B; kernel of [A; -B]^T gives coefficient pairs.
  std::vector<Vec> cols;
  for (const auto& v : ab) cols.push_back(v);
  for (const auto& v : bb) cols.push_back(scaled(v, Scalar(-1)));
  std::vector<Vec> ker = kernel_basis(Matrix::from_cols(cols, n));
  std::vector<Vec> out;
  for (const auto& k : ker) {
    Vec x = zero_vec(n);
    for (size_t i = 0; i < ab.size(); ++i) axpy(x, k[i], ab[i]);
    out.push_back(std::move(x));
  }
  return span_basis(out, n);
}

std::vector<Vec> quotient_complement(const std::vector<Vec>& v, const std::vector<Vec>& w, int n) {
  Echelon e(n);
  for (const auto& x : w) e.insert(x);
  std::vector<Vec> out;
  for (const auto& x : v)
    if (e.insert(x)) out.push_back(x);
  return out;
}

bool in_span(const std::vector<Vec>& vs, const Vec& x) {
  Echelon e(static_cast<int>(x.size()));
  for (const auto& v : vs) e.insert(v);
  return e.contains(x);
}

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, int n) {
  std::vector<Vec> ab = span_basis(a, n), bb = span_basis(b, n);
  if (ab.size() != bb.size()) return false;
  for (size_t i = 0; i < ab.size(); ++i)
    if (ab[i] != bb[i]) return false;
  return true;
}

bool Echelon::insert(const Vec& v) {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector length mismatch");
  Vec r = v;
  Vec combo = zero_vec(static_cast<int>(orig_.size()) + 1);
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& f = r[piv_[k]];
    if (f.is_zero()) continue;
    Scalar fc = f;
    axpy(r, -fc, rows_[k]);
    for (size_t j = 0; j < combo_[k].size(); ++j) combo[j].sub_mul(fc, combo_[k][j]);
  }
  int p = -1;
  for (int i = 0; i < n_; ++i)
    if (!r[i].is_zero()) {
      p = i;
      break;
    }
  if (p < 0) return false;
  combo.back() = Scalar(1);
  Scalar inv = r[p].inv();
  for (auto& x : r) x *= inv;
  for (auto& x : combo) x *= inv;
  for (auto& c : combo_) c.push_back(Scalar(0));
  rows_.push_back(std::move(r));
  combo_.push_back(std::move(combo));
  piv_.push_back(p);
  orig_.push_back(v);
  return true;
}

Vec Echelon::reduce(const Vec& v) const {
  Vec r = v;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar f = r[piv_[k]];
    if (!f.is_zero()) axpy(r, -f, rows_[k]);
  }
  return r;
}

bool Echelon::contains(const Vec& v) const { return qha::is_zero(reduce(v)); }

std::optional<Vec> Echelon::coordinates(const Vec& v) const {
  Vec r = v;
  Vec c = zero_vec(static_cast<int>(orig_.size()));
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Scalar f = r[piv_[k]];
    if (f.is_zero()) continue;
    axpy(r, -f, rows_[k]);
    axpy(c, f, combo_[k]);
  }
  if (!qha::is_zero(r)) return std::nullopt;
  return c;
}

Polynomial::Polynomial(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int deg, const Scalar& c) {
  Vec v = zero_vec(deg + 1);
  v[deg] = c;
  return Polynomial(v);
}

Polynomial Polynomial::linear_root(const Scalar& r) { return Polynomial(Vec{-r, Scalar(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::eval(const Scalar& t) const {
  Scalar r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial();
  Vec out = zero_vec(static_cast<int>(c_.size() + o.c_.size() - 1));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j].add_mul(c_[i], o.c_[j]);
  return Polynomial(out);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Vec out = zero_vec(static_cast<int>(std::max(c_.size(), o.c_.size())));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Polynomial(out);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Vec out = zero_vec(static_cast<int>(std::max(c_.size(), o.c_.size())));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return Polynomial(out);
}

Polynomial Polynomial::pow(int e) const {
  Polynomial r(Vec{Scalar(1)});
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.c_.empty() || !d.c_.back().is_one()) throw std::invalid_argument("divisor must be monic");
  Vec rem = c_;
  int dd = d.degree();
  if (degree() < dd) return {Polynomial(), *this};
  Vec q = zero_vec(degree() - dd + 1);
  for (int i = degree(); i >= dd; --i) {
    Scalar f = rem[i];
    if (f.is_zero()) continue;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j].sub_mul(f, d.c_[j]);
  }
  return {Polynomial(q), Polynomial(rem)};
}

namespace {
std::string term(const Scalar& c, int k, bool first) {
  std::string s = c.str();
  bool neg = !s.empty() && s[0] == '-';
  std::string mag = neg ? s.substr(1) : s;
  std::string out;
  if (first) out = neg ? "-" : "";
  else out = neg ? " - " : " + ";
  bool unit = mag == "1";
  if (k == 0) return out + mag;
  if (!unit) out += mag + "*";
  out += "t";
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}
}  // namespace

std::string Polynomial::str() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    out += term(c_[k], k, first);
    first = false;
  }
  return out;
}

std::string Polynomial::factored_str(const std::vector<Scalar>& candidates) const {
  if (c_.empty()) return "0";
  Polynomial rest = *this;
  Scalar lead = rest.c_.back();
  rest = Polynomial(scaled(rest.c_, lead.inv()));
  std::ostringstream os;
  if (!lead.is_one()) os << lead.str() << "*";
  for (const auto& r : candidates) {
    int mult = 0;
    Polynomial lin = linear_root(r);
    while (rest.degree() >= 1) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.c_.empty()) break;
      rest = q;
      ++mult;
    }
    if (!mult) continue;
    Scalar neg = -r;
    std::string rs = neg.str();
    if (r.is_zero()) os << "t";
    else if (rs[0] == '-') os << "(t - " << rs.substr(1) << ")";
    else os << "(t + " << rs << ")";
    if (mult > 1) os << "^" << mult;
  }
  if (rest.degree() >= 1) os << "(" << rest.str() << ")";
  std::string s = os.str();
  return s.empty() ? "1" : s;
}

Polynomial char_poly(const Matrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  Matrix h = input;
  const int n = h.rows();
  for (int m = 1; m + 1 < n; ++m) {
    int i = -1;
    for (int r = m; r < n; ++r)
      if (!h(r, m - 1).is_zero()) {
        i = r;
        break;
      }
    if (i < 0) continue;
    if (i != m) {
      for (int j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (int j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Scalar inv = h(m, m - 1).inv();
    for (int r = m + 1; r < n; ++r) {
      if (h(r, m - 1).is_zero()) continue;
      Scalar u = h(r, m - 1) * inv;
      for (int j = 0; j < n; ++j) h(r, j).sub_mul(u, h(m, j));
      for (int j = 0; j < n; ++j) h(j, m).add_mul(u, h(j, r));
    }
  }
  std::vector<Polynomial> p(static_cast<size_t>(n + 1));
  p[0] = Polynomial(Vec{Scalar(1)});
  for (int m = 1; m <= n; ++m) {
    p[m] = Polynomial(Vec{-h(m - 1, m - 1), Scalar(1)}) * p[m - 1];
    Scalar t(1);
    for (int i = 1; i < m; ++i) {
      t *= h(m - i, m - i - 1);
      Scalar c = t * h(m - i - 1, m - 1);
      if (c.is_zero()) continue;
      p[m] = p[m] - Polynomial(Vec{c}) * p[m - i - 1];
    }
  }
  return p[n];
}

}  // namespace qha

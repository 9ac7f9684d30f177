#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qha/field.hpp"

namespace qha {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Scalar& a, const Vec& x);
Vec scaled(const Vec& v, const Scalar& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);

// Sorted sparse vector of (index, nonzero coefficient).
struct SVec {
  std::vector<std::pair<int, Scalar>> e;

  bool empty() const { return e.empty(); }
  void add(int i, const Scalar& c);
  void add(const SVec& o, const Scalar& c);
  void canonicalize();
  Scalar get(int i) const;
  Vec dense(int n) const;
  static SVec from_dense(const Vec& v);
  bool operator==(const SVec& o) const;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_cols(const std::vector<Vec>& cols, int rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);
  Scalar trace() const;
  Vec flatten() const { return a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix m;
  std::vector<int> pivots;
  int rank = 0;
};

Rref rref(const Matrix& m);
int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar det(const Matrix& m);

// Subspaces of k^n are passed as lists of spanning vectors; results are rref row bases.
std::vector<Vec> span_basis(const std::vector<Vec>& vs, int n);
std::vector<Vec> subspace_sum(const std::vector<Vec>& a, const std::vector<Vec>& b, int n);
std::vector<Vec> subspace_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b, int n);
// Vectors of v completing a basis of w to one of w + v (chosen by pivots).
std::vector<Vec> quotient_complement(const std::vector<Vec>& v, const std::vector<Vec>& w, int n);
bool in_span(const std::vector<Vec>& vs, const Vec& x);
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, int n);

// Incremental echelon form with coordinate tracking relative to inserted vectors.
class Echelon {
 public:
  explicit Echelon(int n) : n_(n) {}
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  // Returns true if v was independent and got inserted.
  bool insert(const Vec& v);
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  // Coordinates of v in terms of the inserted (independent) vectors, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  const std::vector<Vec>& inserted() const { return orig_; }
  // Reduced vectors have zeros in these positions.
  const std::vector<int>& pivots() const { return piv_; }

 private:
  int n_;
  std::vector<Vec> rows_;
  std::vector<Vec> combo_;
  std::vector<int> piv_;
  std::vector<Vec> orig_;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs);
  static Polynomial monomial(int deg, const Scalar& c);
  static Polynomial linear_root(const Scalar& r);  // t - r

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Vec& coeffs() const { return c_; }
  Scalar eval(const Scalar& t) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial pow(int e) const;
  // Quotient and remainder by a monic polynomial.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& monic) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;
  // Splits off linear factors with roots from the candidate list; leftover printed in expanded form.
  std::string factored_str(const std::vector<Scalar>& candidates) const;

 private:
  void trim();
  Vec c_;
};

Polynomial char_poly(const Matrix& m);

}  // namespace qha

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace qha {

class Field {
 public:
  static Field rational() { return Field(0); }
  static Field prime(std::uint64_t p);
  static Field parse(const std::string& spec);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

  static const Field& current();
  static void set_current(const Field& f);

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

// Installs a field for the lifetime of the scope (per thread).
class FieldScope {
 public:
  explicit FieldScope(const Field& f);
  ~FieldScope();
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  Field saved_;
};

bool is_prime(std::uint64_t n);
std::uint64_t smallest_prime_congruent_one(std::uint64_t modulus, std::uint64_t above);

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);
  Scalar(int v) : Scalar(static_cast<long>(v)) {}
  Scalar(long num, long den);
  static Scalar from_string(const std::string& s);

  bool is_zero() const;
  bool is_one() const;
  Scalar inv() const;
  Scalar pow(long e) const;
  // A square root in the current field, if one exists.
  std::optional<Scalar> sqrt() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // a += b * c without temporaries
  void add_mul(const Scalar& b, const Scalar& c);
  void sub_mul(const Scalar& b, const Scalar& c);

  std::string str() const;
  // Residue in [0, p) over a prime field; numerator over Q.
  std::int64_t residue() const;

 private:
  mpq_class q_;
  std::int64_t r_ = 0;
};

}  // namespace qha

#include "qha/field.hpp"

#include <stdexcept>

namespace qha {

namespace {
thread_local Field g_field = Field::rational();

std::uint64_t modp() { return Field::current().characteristic(); }

std::int64_t mod_pow(std::int64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1, x = static_cast<std::uint64_t>(b) % p;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t reduce(long v, std::uint64_t p) {
  long m = v % static_cast<long>(p);
  return m < 0 ? m + static_cast<long>(p) : m;
}
}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t smallest_prime_congruent_one(std::uint64_t modulus, std::uint64_t above) {
  for (std::uint64_t p = above + 1;; ++p)
    if (p % modulus == 1 && is_prime(p)) return p;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) throw std::invalid_argument("prime field characteristic must be below 2^31");
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "rational" || spec == "Q") return rational();
  if (spec.rfind("fp:", 0) == 0) return prime(std::stoull(spec.substr(3)));
  throw std::invalid_argument("unknown field '" + spec + "' (expected rational or fp:<p>)");
}

std::string Field::name() const { return p_ == 0 ? "rational" : "fp:" + std::to_string(p_); }

const Field& Field::current() { return g_field; }
void Field::set_current(const Field& f) { g_field = f; }

FieldScope::FieldScope(const Field& f) : saved_(Field::current()) { Field::set_current(f); }
FieldScope::~FieldScope() { Field::set_current(saved_); }

Scalar::Scalar(long v) {
  std::uint64_t p = modp();
  if (p) r_ = reduce(v, p);
  else q_ = v;
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw std::domain_error("division by zero");
  std::uint64_t p = modp();
  if (p) {
    std::int64_t d = reduce(den, p);
    if (d == 0) throw std::domain_error("division by zero");
    r_ = reduce(num, p) * mod_pow(d, p - 2, p) % static_cast<std::int64_t>(p);
  } else {
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
}

Scalar Scalar::from_string(const std::string& s) {
  Scalar out;
  std::uint64_t p = modp();
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar '" + s + "'");
  q.canonicalize();
  if (!p) {
    out.q_ = q;
    return out;
  }
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class n = q.get_num() % pz, d = q.get_den() % pz;
  if (n < 0) n += pz;
  if (d == 0) throw std::domain_error("division by zero");
  out.r_ = static_cast<std::int64_t>(n.get_ui()) * mod_pow(static_cast<std::int64_t>(d.get_ui()), p - 2, p) %
           static_cast<std::int64_t>(p);
  return out;
}

bool Scalar::is_zero() const { return modp() ? r_ == 0 : sgn(q_) == 0; }
bool Scalar::is_one() const { return modp() ? r_ == 1 : q_ == 1; }

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar out;
  std::uint64_t p = modp();
  if (p) out.r_ = mod_pow(r_, p - 2, p);
  else out.q_ = 1 / q_;
  return out;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inv() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Scalar r(1);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::optional<Scalar> Scalar::sqrt() const {
  std::uint64_t p = modp();
  if (p) {
    if (r_ == 0) return Scalar(0);
    if (p == 2) return *this;
    if (mod_pow(r_, (p - 1) / 2, p) != 1) return std::nullopt;
    for (std::uint64_t x = 1; x < p; ++x)
      if ((x * x) % p == static_cast<std::uint64_t>(r_)) {
        Scalar out;
        out.r_ = static_cast<std::int64_t>(x);
        return out;
      }
    return std::nullopt;
  }
  if (sgn(q_) < 0) return std::nullopt;
  mpz_class n = q_.get_num(), d = q_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Scalar out;
  out.q_ = mpq_class(rn, rd);
  out.q_.canonicalize();
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out;
  std::uint64_t p = modp();
  if (p) out.r_ = r_ == 0 ? 0 : static_cast<std::int64_t>(p) - r_;
  else out.q_ = -q_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint64_t p = modp();
  if (p) {
    r_ += o.r_;
    if (r_ >= static_cast<std::int64_t>(p)) r_ -= static_cast<std::int64_t>(p);
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  std::uint64_t p = modp();
  if (p) {
    r_ -= o.r_;
    if (r_ < 0) r_ += static_cast<std::int64_t>(p);
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint64_t p = modp();
  if (p) r_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(r_) * static_cast<std::uint64_t>(o.r_) % p);
  else q_ *= o.q_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

void Scalar::add_mul(const Scalar& b, const Scalar& c) {
  std::uint64_t p = modp();
  if (p) {
    r_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(r_) +
                                    static_cast<std::uint64_t>(b.r_) * static_cast<std::uint64_t>(c.r_)) %
                                   p);
  } else {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), b.q_.get_mpq_t(), c.q_.get_mpq_t());
    q_ += t;
  }
}

void Scalar::sub_mul(const Scalar& b, const Scalar& c) {
  std::uint64_t p = modp();
  if (p) {
    std::uint64_t prod = static_cast<std::uint64_t>(b.r_) * static_cast<std::uint64_t>(c.r_) % p;
    r_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(r_) + p - prod) % p);
  } else {
    thread_local mpq_class t;
    mpq_mul(t.get_mpq_t(), b.q_.get_mpq_t(), c.q_.get_mpq_t());
    q_ -= t;
  }
}

bool Scalar::operator==(const Scalar& o) const { return modp() ? r_ == o.r_ : q_ == o.q_; }

std::string Scalar::str() const { return modp() ? std::to_string(r_) : q_.get_str(); }

std::int64_t Scalar::residue() const {
  if (modp()) return r_;
  if (q_.get_den() != 1 || !q_.get_num().fits_slong_p()) throw std::domain_error("scalar is not a small integer");
  return q_.get_num().get_si();
}

}  // namespace qha

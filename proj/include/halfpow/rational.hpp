#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace halfpow {

// Exact rational number. Always stored in lowest terms with a positive
// denominator; arithmetic never rounds.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // NOLINT: implicit by design
  Rational(long num, long den) : q_(num, den) { normalize(); }
  Rational(mpz_class num, mpz_class den)
      : q_(std::move(num), std::move(den)) {
    normalize();
  }
  explicit Rational(mpz_class value) : q_(std::move(value)) {}
  explicit Rational(mpq_class value) : q_(std::move(value)) { normalize(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  Rational operator-() const { return Rational(mpq_class(-q_), Canonical{}); }
  Rational abs() const {
    return sign() < 0 ? -*this : *this;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  // Exact integer power; negative exponents require a nonzero base.
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long ue = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                              : static_cast<unsigned long>(e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), ue);
    mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), ue);
    Rational out(std::move(r), Canonical{});
    if (invert) {
      if (out.is_zero()) throw std::domain_error("Rational: 0^negative");
      mpq_inv(out.q_.get_mpq_t(), out.q_.get_mpq_t());
    }
    return out;
  }

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const { return q_.get_str(); }

 private:
  struct Canonical {};
  Rational(mpq_class value, Canonical) : q_(std::move(value)) {}

  void normalize() {
    if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  mpq_class q_;  // invariant: canonical form, denominator > 0
};

// Binomial coefficient with rational upper argument:
// binom(alpha, i) = alpha (alpha-1) ... (alpha-i+1) / i!
inline Rational binomial(const Rational& alpha, unsigned long i) {
  Rational acc(1);
  Rational term = alpha;
  for (unsigned long j = 0; j < i; ++j) {
    acc *= term / Rational(static_cast<long>(j) + 1);
    term -= Rational(1);
  }
  return acc;
}

// Plain integer binomial coefficient.
inline mpz_class binomial_int(unsigned long n, unsigned long r) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

}  // namespace halfpow

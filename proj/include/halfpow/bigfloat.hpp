#pragma once

#include <mpfr.h>

#include <string>

#include "halfpow/rational.hpp"

namespace halfpow {

// Thin RAII wrapper over an mpfr_t with value semantics. Arithmetic with
// explicit rounding lives in ApproxReal; this class carries storage,
// conversions and comparisons.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(x_, 2);
    mpfr_swap(x_, o.x_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(x_, o.x_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(x_); }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

  static BigFloat of_rational(const Rational& q, mpfr_prec_t prec,
                              mpfr_rnd_t rnd = MPFR_RNDN) {
    BigFloat out(prec);
    mpfr_set_q(out.x_, q.raw().get_mpq_t(), rnd);
    return out;
  }
  static BigFloat of_long(long v, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_si(out.x_, v, MPFR_RNDN);
    return out;
  }
  static BigFloat of_double(double v, mpfr_prec_t prec) {
    BigFloat out(prec);
    mpfr_set_d(out.x_, v, MPFR_RNDN);
    return out;
  }
  // 2^e, exact.
  static BigFloat pow2(long e, mpfr_prec_t prec = 64) {
    BigFloat out(prec);
    mpfr_set_ui_2exp(out.x_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
    return out;
  }
  static BigFloat parse_decimal(const std::string& text, mpfr_prec_t prec);

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Scientific decimal with the given number of significant digits.
  std::string to_decimal(std::size_t digits) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.x_, b.x_) < 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return !(b < a);
  }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) {
    return !(a < b);
  }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.x_, b.x_) == 0;
  }

 private:
  mpfr_t x_;
};

}  // namespace halfpow

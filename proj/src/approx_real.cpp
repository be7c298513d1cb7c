#include "halfpow/approx_real.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <utility>
#include <vector>

#include "halfpow/errors.hpp"

namespace halfpow {

namespace {

constexpr mpfr_prec_t kRad = ApproxReal::kRadiusPrec;

// Upper bound on the rounding error of a round-to-nearest result: one ulp
// when the ternary flag reports an inexact operation, zero otherwise.
BigFloat ulp_bound(mpfr_srcptr v, int ternary) {
  BigFloat out(kRad);
  if (ternary == 0) return out;
  if (mpfr_zero_p(v)) {
    // Only reachable through exponent underflow, far outside our ranges.
    throw ConvergenceParameters("rounding underflow while tracking error");
  }
  mpfr_set_ui_2exp(out.raw(), 1,
                   mpfr_get_exp(v) - mpfr_get_prec(v), MPFR_RNDU);
  return out;
}

// One ulp of v regardless of exactness; used to pad |v| upward.
BigFloat ulp_always(mpfr_srcptr v) {
  BigFloat out(kRad);
  if (mpfr_zero_p(v)) return out;
  mpfr_set_ui_2exp(out.raw(), 1,
                   mpfr_get_exp(v) - mpfr_get_prec(v), MPFR_RNDU);
  return out;
}

BigFloat abs_up(mpfr_srcptr v) {
  BigFloat out(kRad);
  mpfr_abs(out.raw(), v, MPFR_RNDU);
  return out;
}

BigFloat add_up(const BigFloat& a, const BigFloat& b) {
  BigFloat out(kRad);
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

BigFloat mul_up(const BigFloat& a, const BigFloat& b) {
  BigFloat out(kRad);
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return out;
}

}  // namespace

ApproxReal ApproxReal::exact_long(long v, mpfr_prec_t prec) {
  BigFloat value(prec);
  const int t = mpfr_set_si(value.raw(), v, MPFR_RNDN);
  BigFloat error = ulp_bound(value.raw(), t);
  return ApproxReal(std::move(value), std::move(error));
}

ApproxReal ApproxReal::of_rational(const Rational& q, mpfr_prec_t prec) {
  BigFloat value(prec);
  const int t = mpfr_set_q(value.raw(), q.raw().get_mpq_t(), MPFR_RNDN);
  BigFloat error = ulp_bound(value.raw(), t);
  return ApproxReal(std::move(value), std::move(error));
}

ApproxReal ApproxReal::from_parts(BigFloat value, BigFloat error) {
  if (error.sign() < 0) {
    throw std::invalid_argument("ApproxReal: negative error bound");
  }
  return ApproxReal(std::move(value), std::move(error));
}

ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
  BigFloat value(std::max(a.precision(), b.precision()));
  const int t = mpfr_add(value.raw(), a.value_.raw(), b.value_.raw(), MPFR_RNDN);
  BigFloat error = add_up(add_up(a.error_, b.error_), ulp_bound(value.raw(), t));
  return ApproxReal::from_parts(std::move(value), std::move(error));
}

ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) {
  BigFloat value(std::max(a.precision(), b.precision()));
  const int t = mpfr_sub(value.raw(), a.value_.raw(), b.value_.raw(), MPFR_RNDN);
  BigFloat error = add_up(add_up(a.error_, b.error_), ulp_bound(value.raw(), t));
  return ApproxReal::from_parts(std::move(value), std::move(error));
}

ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
  BigFloat value(std::max(a.precision(), b.precision()));
  const int t = mpfr_mul(value.raw(), a.value_.raw(), b.value_.raw(), MPFR_RNDN);
  BigFloat error = add_up(mul_up(abs_up(a.value_.raw()), b.error_),
                          mul_up(abs_up(b.value_.raw()), a.error_));
  error = add_up(error, mul_up(a.error_, b.error_));
  error = add_up(error, ulp_bound(value.raw(), t));
  return ApproxReal::from_parts(std::move(value), std::move(error));
}

ApproxReal operator/(const ApproxReal& a, const ApproxReal& b) {
  // Lower bound of |b| over its whole enclosure.
  BigFloat denom_lo(kRad);
  mpfr_abs(denom_lo.raw(), b.value_.raw(), MPFR_RNDD);
  mpfr_sub(denom_lo.raw(), denom_lo.raw(), b.error_.raw(), MPFR_RNDD);
  if (denom_lo.sign() <= 0) {
    throw ConvergenceParameters("division: divisor enclosure contains zero");
  }
  BigFloat value(std::max(a.precision(), b.precision()));
  const int t = mpfr_div(value.raw(), a.value_.raw(), b.value_.raw(), MPFR_RNDN);
  // |a/b - v| <= (err_a + (|v|+ulp) err_b) / |b|_lo + rounding
  BigFloat quotient_hi = add_up(abs_up(value.raw()), ulp_always(value.raw()));
  BigFloat numerator = add_up(a.error_, mul_up(quotient_hi, b.error_));
  BigFloat error(kRad);
  mpfr_div(error.raw(), numerator.raw(), denom_lo.raw(), MPFR_RNDU);
  error = add_up(error, ulp_bound(value.raw(), t));
  return ApproxReal::from_parts(std::move(value), std::move(error));
}

ApproxReal ApproxReal::operator-() const {
  BigFloat value(precision());
  mpfr_neg(value.raw(), value_.raw(), MPFR_RNDN);  // exact
  return ApproxReal(std::move(value), error_);
}

ApproxReal ApproxReal::scaled(const Rational& q) const {
  BigFloat value(precision());
  const int t = mpfr_mul_q(value.raw(), value_.raw(), q.raw().get_mpq_t(),
                           MPFR_RNDN);
  BigFloat scale(kRad);
  mpfr_set_q(scale.raw(), q.abs().raw().get_mpq_t(), MPFR_RNDU);
  BigFloat error = add_up(mul_up(error_, scale), ulp_bound(value.raw(), t));
  return ApproxReal(std::move(value), std::move(error));
}

ApproxReal ApproxReal::plus_rational(const Rational& q) const {
  BigFloat value(precision());
  const int t = mpfr_add_q(value.raw(), value_.raw(), q.raw().get_mpq_t(),
                           MPFR_RNDN);
  BigFloat error = add_up(error_, ulp_bound(value.raw(), t));
  return ApproxReal(std::move(value), std::move(error));
}

ApproxReal sqrt_enclosure(const ApproxReal& x) {
  const mpfr_prec_t prec = x.precision();
  BigFloat hi(prec);
  mpfr_add(hi.raw(), x.value_.raw(), x.error_.raw(), MPFR_RNDU);
  if (hi.sign() < 0) {
    throw NegativeInput("sqrt of a surely negative enclosure");
  }
  BigFloat lo(prec);
  mpfr_sub(lo.raw(), x.value_.raw(), x.error_.raw(), MPFR_RNDD);
  if (lo.sign() < 0) mpfr_set_zero(lo.raw(), 1);

  BigFloat value(prec);
  if (x.value_.sign() < 0) {
    mpfr_set_zero(value.raw(), 1);
  } else {
    mpfr_sqrt(value.raw(), x.value_.raw(), MPFR_RNDN);
  }
  BigFloat root_hi(prec), root_lo(prec);
  mpfr_sqrt(root_hi.raw(), hi.raw(), MPFR_RNDU);
  mpfr_sqrt(root_lo.raw(), lo.raw(), MPFR_RNDD);

  BigFloat up(ApproxReal::kRadiusPrec), down(ApproxReal::kRadiusPrec);
  mpfr_sub(up.raw(), root_hi.raw(), value.raw(), MPFR_RNDU);
  mpfr_sub(down.raw(), value.raw(), root_lo.raw(), MPFR_RNDU);
  BigFloat error = up < down ? down : up;
  if (error.sign() < 0) mpfr_set_zero(error.raw(), 1);
  return ApproxReal::from_parts(std::move(value), std::move(error));
}

ApproxReal pow_int(const ApproxReal& base, unsigned long e) {
  ApproxReal acc = ApproxReal::exact_long(1, base.precision());
  ApproxReal b = base;
  while (e > 0) {
    if (e & 1UL) acc = acc * b;
    b = b * b;
    e >>= 1UL;
  }
  return acc;
}

bool ApproxReal::contains_zero() const {
  return mpfr_cmpabs(value_.raw(), error_.raw()) <= 0;
}

BigFloat ApproxReal::abs_upper() const {
  return add_up(abs_up(value_.raw()), error_);
}

BigFloat ApproxReal::abs_lower() const {
  BigFloat out(kRad);
  mpfr_abs(out.raw(), value_.raw(), MPFR_RNDD);
  mpfr_sub(out.raw(), out.raw(), error_.raw(), MPFR_RNDD);
  if (out.sign() < 0) mpfr_set_zero(out.raw(), 1);
  return out;
}

ApproxReal ApproxReal::rounded_to(mpfr_prec_t prec) const {
  BigFloat value(prec);
  const int t = mpfr_set(value.raw(), value_.raw(), MPFR_RNDN);
  BigFloat error = add_up(error_, ulp_bound(value.raw(), t));
  return ApproxReal(std::move(value), std::move(error));
}

ApproxReal ApproxReal::with_added_error(const BigFloat& extra) const {
  if (extra.sign() < 0) {
    throw std::invalid_argument("with_added_error: negative bound");
  }
  return ApproxReal(value_, add_up(error_, extra));
}

std::string ApproxReal::to_string(std::size_t digits) const {
  return value_.to_decimal(digits) + " +/- " + error_.to_decimal(3);
}

ApproxReal sqrt_rational(const Rational& x, mpfr_prec_t prec) {
  if (x.sign() < 0) throw NegativeInput("sqrt of negative rational");
  return sqrt_enclosure(ApproxReal::of_rational(x, prec));
}

ApproxReal rational_power(const Rational& x, const Rational& e,
                          mpfr_prec_t prec) {
  if (x.sign() <= 0) {
    throw std::domain_error("rational_power requires a positive base");
  }
  const mpz_class den = e.denominator();
  if (den == 1) {
    if (!e.numerator().fits_slong_p()) {
      throw std::invalid_argument("rational_power: exponent too large");
    }
    return ApproxReal::of_rational(x.pow(e.numerator().get_si()), prec);
  }
  if (den == 2) {
    if (!e.numerator().fits_slong_p()) {
      throw std::invalid_argument("rational_power: exponent too large");
    }
    // num is odd in canonical form, so (num-1)/2 is an exact integer and
    // x^{num/2} = x^{(num-1)/2} * sqrt(x).
    const long num = e.numerator().get_si();
    return sqrt_rational(x, prec).scaled(x.pow((num - 1) / 2));
  }
  throw std::invalid_argument("rational_power: denominator must be 1 or 2");
}

}  // namespace halfpow

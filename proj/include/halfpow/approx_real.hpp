#pragma once

#include <mpfr.h>

#include <string>

#include "halfpow/bigfloat.hpp"
#include "halfpow/rational.hpp"

namespace halfpow {

// Arbitrary-precision real enclosure: a value at the working precision
// paired with a conservative absolute error bound. The invariant is that
// the true quantity lies in [value - error, value + error]; every
// operation over-approximates the propagated bound.
class ApproxReal {
 public:
  ApproxReal() : value_(64), error_(kRadiusPrec) {}

  static ApproxReal exact_long(long v, mpfr_prec_t prec);
  static ApproxReal of_rational(const Rational& q, mpfr_prec_t prec);
  // Takes ownership; `error` must be nonnegative.
  static ApproxReal from_parts(BigFloat value, BigFloat error);

  const BigFloat& value() const { return value_; }
  const BigFloat& error() const { return error_; }
  mpfr_prec_t precision() const { return value_.precision(); }

  friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator-(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator*(const ApproxReal& a, const ApproxReal& b);
  // Throws ConvergenceParameters when the divisor enclosure contains zero.
  friend ApproxReal operator/(const ApproxReal& a, const ApproxReal& b);
  ApproxReal operator-() const;

  // Exact rational scalar operations.
  ApproxReal scaled(const Rational& q) const;
  ApproxReal plus_rational(const Rational& q) const;

  friend ApproxReal sqrt_enclosure(const ApproxReal& x);
  friend ApproxReal pow_int(const ApproxReal& base, unsigned long e);

  bool contains_zero() const;
  BigFloat abs_upper() const;  // upper bound on |true value|
  BigFloat abs_lower() const;  // lower bound on |true value|
  ApproxReal rounded_to(mpfr_prec_t prec) const;
  ApproxReal with_added_error(const BigFloat& extra) const;

  std::string to_string(std::size_t digits = 20) const;

  static constexpr mpfr_prec_t kRadiusPrec = 64;

 private:
  ApproxReal(BigFloat value, BigFloat error)
      : value_(std::move(value)), error_(std::move(error)) {}

  BigFloat value_;  // round-to-nearest at the working precision
  BigFloat error_;  // nonnegative, rounded up at kRadiusPrec
};

// sqrt of an exact rational; throws NegativeInput for x < 0.
ApproxReal sqrt_rational(const Rational& x, mpfr_prec_t prec);

// x^e for exact rational x > 0 and rational e with denominator 1 or 2.
ApproxReal rational_power(const Rational& x, const Rational& e,
                          mpfr_prec_t prec);

}  // namespace halfpow

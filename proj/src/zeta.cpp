#include "halfpow/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "halfpow/bernoulli.hpp"
#include "halfpow/errors.hpp"

namespace halfpow {

namespace {

long target_bits(const BigFloat& target) {
  // -floor(log2(target)), clamped below at 1.
  const mpfr_exp_t e = mpfr_get_exp(target.raw());
  return std::max<long>(1, static_cast<long>(-e) + 1);
}

}  // namespace

ApproxReal hurwitz_zeta(const Rational& s, const Rational& a,
                        mpfr_prec_t prec, const BigFloat& target_abs_err) {
  if (s <= Rational(1)) {
    throw std::domain_error("hurwitz_zeta requires s > 1");
  }
  if (a < Rational(1)) {
    throw std::domain_error("hurwitz_zeta requires a >= 1");
  }
  if (target_abs_err.sign() <= 0) {
    throw std::invalid_argument("hurwitz_zeta: target must be positive");
  }

  const long tb = target_bits(target_abs_err);
  const double s_d = mpq_get_d(s.raw().get_mpq_t());
  const double a_d = mpq_get_d(a.raw().get_mpq_t());
  // The correction terms bottom out near e^{-2 pi w} at cutoff w = a + M;
  // size the direct block so that floor sits beneath the target.
  long block = std::max<long>(
      0, static_cast<long>(0.12 * static_cast<double>(tb) + 0.3 * s_d + 6.0 -
                           a_d));
  constexpr int kMaxAttempts = 5;
  constexpr long kMaxCorrections = 300;

  BigFloat quarter_target(ApproxReal::kRadiusPrec);
  mpfr_div_ui(quarter_target.raw(), target_abs_err.raw(), 4, MPFR_RNDD);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const mpfr_prec_t wp =
        std::max<mpfr_prec_t>(prec, tb) + 64 + 32 * attempt;

    ApproxReal sum = ApproxReal::exact_long(0, wp);
    for (long j = 0; j < block; ++j) {
      sum = sum + rational_power(a + Rational(j), -s, wp);
    }
    const Rational w = a + Rational(block);
    // w^{1-s}/(s-1) + w^{-s}/2
    sum = sum + rational_power(w, Rational(1) - s, wp)
                    .scaled(Rational(1) / (s - Rational(1)));
    sum = sum + rational_power(w, -s, wp).scaled(Rational(1, 2));

    std::vector<Rational> bern = shared_bernoulli_prefix(96);
    Rational rising = s;          // (s)_{2r-1}, built incrementally
    mpz_class factorial(2);       // (2r)!
    bool bounded = false;
    BigFloat remainder_bound(ApproxReal::kRadiusPrec);
    BigFloat prev_mag(ApproxReal::kRadiusPrec);
    for (long r = 1; r <= kMaxCorrections; ++r) {
      if (static_cast<std::size_t>(2 * r + 2) >= bern.size()) {
        bern = shared_bernoulli_prefix(static_cast<std::size_t>(2 * r + 96));
      }
      const Rational coeff = bern[static_cast<std::size_t>(2 * r)] * rising /
                             Rational(mpz_class(factorial));
      const ApproxReal term =
          rational_power(w, Rational(1 - 2 * r) - s, wp).scaled(coeff);
      const BigFloat magnitude = term.abs_upper();
      if (magnitude <= quarter_target) {
        // The remainder after the previous correction has the magnitude of
        // the first omitted term; f^{(2r)} keeps one sign on [w, inf).
        remainder_bound = magnitude;
        bounded = true;
        break;
      }
      if (r > 2 && magnitude > prev_mag) {
        break;  // asymptotic floor reached; retry with a larger block
      }
      prev_mag = magnitude;
      sum = sum + term;
      rising *= (s + Rational(2 * r - 1)) * (s + Rational(2 * r));
      factorial *= (2 * r + 1) * (2 * r + 2);
    }

    if (bounded) {
      ApproxReal result =
          sum.with_added_error(remainder_bound).rounded_to(prec);
      if (result.error() <= target_abs_err) return result;
    }
    block = std::max<long>(2 * block, block + 24);
  }
  throw ConvergenceParameters(
      "hurwitz_zeta: cannot reach the requested bound at this precision");
}

}  // namespace halfpow

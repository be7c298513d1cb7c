#include "halfpow/identity_eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "halfpow/errors.hpp"

namespace halfpow {

namespace {

// tau budget that keeps the constant's bound within 2^{8-prec}.
BigFloat constant_tau_target(mpfr_prec_t prec, std::size_t terms) {
  BigFloat target = BigFloat::pow2(2 - static_cast<long>(prec));
  mpfr_div_ui(target.raw(), target.raw(),
              std::max<unsigned long>(1, terms), MPFR_RNDD);
  return target;
}

}  // namespace

DecompositionEvaluator::DecompositionEvaluator(long k, mpfr_prec_t prec)
    : k_(k), prec_(prec), decomposition_(::halfpow::decomposition(k)) {
  std::size_t terms = 0;
  for (const auto& [i, a] : decomposition_.tau_coeffs) {
    if (i >= 3 && !a.is_zero()) ++terms;
  }
  // C_k = 1 - P_k(1) - sum_i A_i tau(1, i); the rational part stays exact.
  const Rational exact_part =
      Rational(1) - decomposition_.poly_part(Rational(1));
  constant_ = ApproxReal::of_rational(exact_part, prec) -
              tau_sum(1, constant_tau_target(prec, terms));
}

ApproxReal DecompositionEvaluator::tau_sum(
    long n, const BigFloat& per_term_target) const {
  ApproxReal acc = ApproxReal::exact_long(0, prec_);
  for (const auto& [i, a] : decomposition_.tau_coeffs) {
    if (i < 3 || a.is_zero()) continue;
    acc = acc + tau(n, i, prec_, per_term_target).scaled(a);
  }
  return acc;
}

ApproxReal DecompositionEvaluator::lhs(long n) const {
  return half_power_sum(k_, n, prec_);
}

ApproxReal DecompositionEvaluator::rhs(long n) const {
  return rhs_with_budget(n, BigFloat::pow2(16 - static_cast<long>(prec_)));
}

VerifyResult DecompositionEvaluator::verify(long n) const {
  ApproxReal residual = lhs(n) - rhs(n);
  return VerifyResult{residual, residual.contains_zero()};
}

VerifyResult DecompositionEvaluator::verify(long n, const BigFloat& tol) const {
  if (tol.sign() <= 0) {
    throw std::invalid_argument("verify: tolerance must be positive");
  }
  // Feasibility at this precision: the identity's sides carry magnitudes up
  // to n^{(k+2)/2}, so absolute bounds below scale * 2^{-prec} are out of
  // reach no matter how the tau budget is split.
  const double scale_log2 =
      static_cast<double>(k_ + 2) / 2.0 *
          std::log2(static_cast<double>(n) + 1.0) +
      std::log2(static_cast<double>(n) + 16.0);
  const double feasible_log2 =
      scale_log2 + 8.0 - static_cast<double>(prec_);
  const double tol_log2 = static_cast<double>(mpfr_get_exp(tol.raw()));
  if (tol_log2 < feasible_log2) {
    throw ConvergenceParameters(
        "verify: tolerance unreachable at precision " + std::to_string(prec_));
  }
  BigFloat per_term = BigFloat::pow2(16 - static_cast<long>(prec_));
  BigFloat from_tol(ApproxReal::kRadiusPrec);
  mpfr_div_ui(from_tol.raw(), tol.raw(), 16, MPFR_RNDD);
  if (from_tol < per_term) per_term = from_tol;

  ApproxReal residual = lhs(n) - rhs_with_budget(n, per_term);
  return VerifyResult{residual, residual.contains_zero()};
}

ApproxReal DecompositionEvaluator::rhs_with_budget(
    long n, const BigFloat& per_term_target) const {
  if (n < 1) throw std::invalid_argument("rhs: n must be positive");
  const ApproxReal poly_term =
      sqrt_rational(Rational(n), prec_)
          .scaled(decomposition_.poly_part(Rational(n)));
  return constant_ + poly_term + tau_sum(n, per_term_target);
}

ApproxReal half_power_sum(long k, long n, mpfr_prec_t prec) {
  detail::require_odd_k(k);
  if (n < 0) throw std::invalid_argument("half_power_sum: n nonnegative");
  ApproxReal acc = ApproxReal::exact_long(0, prec);
  for (long i = 1; i <= n; ++i) {
    acc = acc + pow_int(sqrt_rational(Rational(i), prec),
                        static_cast<unsigned long>(k));
  }
  return acc;
}

ApproxReal decomposition_constant(long k, mpfr_prec_t prec) {
  return DecompositionEvaluator(k, prec).constant();
}

ApproxReal decomposition_value(long k, long n, mpfr_prec_t prec) {
  return DecompositionEvaluator(k, prec).rhs(n);
}

VerifyResult verify_decomposition(long k, long n, mpfr_prec_t prec) {
  return DecompositionEvaluator(k, prec).verify(n);
}

VerifyResult verify_decomposition(long k, long n, mpfr_prec_t prec,
                                  const BigFloat& tol) {
  return DecompositionEvaluator(k, prec).verify(n, tol);
}

}  // namespace halfpow

#pragma once

#include <mpfr.h>

#include <optional>

#include "halfpow/approx_real.hpp"
#include "halfpow/decomposition.hpp"
#include "halfpow/tau.hpp"

namespace halfpow {

struct VerifyResult {
  ApproxReal residual;  // lhs - rhs
  bool pass = false;    // |residual value| within its own tracked bound
};

// Evaluates both sides of the half-power identity for one odd k. The
// decomposition and the constant are computed once and shared across the
// verification grid.
class DecompositionEvaluator {
 public:
  DecompositionEvaluator(long k, mpfr_prec_t prec);

  const Decomposition& decomposition() const { return decomposition_; }
  const ApproxReal& constant() const { return constant_; }
  mpfr_prec_t precision() const { return prec_; }

  // sum_{i=1}^n i^{k/2}; n = 0 yields the empty sum.
  ApproxReal lhs(long n) const;
  // C_k + sqrt(n) P_k(n) + sum_i A_i tau(n, i)
  ApproxReal rhs(long n) const;

  VerifyResult verify(long n) const;
  // Budgets the tau evaluations from `tol` and refuses infeasible requests.
  VerifyResult verify(long n, const BigFloat& tol) const;

  // sum_i A_i tau(n, i) over the nonzero coefficients.
  ApproxReal tau_sum(long n, const BigFloat& per_term_target) const;

 private:
  ApproxReal rhs_with_budget(long n, const BigFloat& per_term_target) const;

  long k_;
  mpfr_prec_t prec_;
  Decomposition decomposition_;
  ApproxReal constant_;
};

ApproxReal half_power_sum(long k, long n, mpfr_prec_t prec);
ApproxReal decomposition_constant(long k, mpfr_prec_t prec);
ApproxReal decomposition_value(long k, long n, mpfr_prec_t prec);
VerifyResult verify_decomposition(long k, long n, mpfr_prec_t prec);
VerifyResult verify_decomposition(long k, long n, mpfr_prec_t prec,
                                  const BigFloat& tol);

}  // namespace halfpow

#pragma once

#include <mpfr.h>

#include "halfpow/approx_real.hpp"
#include "halfpow/bigfloat.hpp"
#include "halfpow/rational.hpp"

namespace halfpow {

// sum_{j>=0} (a+j)^{-s} for rational s > 1 with denominator 1 or 2 and
// rational a >= 1, with error at most target_abs_err. Direct summation of
// an initial block plus the Euler-Maclaurin correction with its classical
// remainder bound; throws ConvergenceParameters when the internal block
// sizes cannot reach the bound at the given precision.
ApproxReal hurwitz_zeta(const Rational& s, const Rational& a,
                        mpfr_prec_t prec, const BigFloat& target_abs_err);

}  // namespace halfpow

#pragma once

#include <mpfr.h>

#include "halfpow/approx_real.hpp"
#include "halfpow/bigfloat.hpp"

namespace halfpow {

// Request for tau(n, m) = sum_{v>=0} (sqrt(n+v) + sqrt(n+v+1))^{-m},
// the series being convergent only for m >= 3.
struct TauRequest {
  long n = 0;
  long m = 3;
  BigFloat target_abs_err = BigFloat::pow2(-60);
};

// Accelerated evaluation: a direct block for small summands, then the tail
// rewritten through Catalan-power coefficients as a combination of Hurwitz
// zeta values at half-integer arguments, with a rigorously bounded
// truncation remainder. The result's error is at most target_abs_err.
ApproxReal tau(const TauRequest& req, mpfr_prec_t prec);

inline ApproxReal tau(long n, long m, mpfr_prec_t prec,
                      const BigFloat& target_abs_err) {
  return tau(TauRequest{n, m, target_abs_err}, prec);
}

}  // namespace halfpow

#pragma once

#include <cstddef>
#include <vector>

#include <mpfr.h>

#include "halfpow/polynomial.hpp"
#include "halfpow/series.hpp"

namespace halfpow {

// For odd m, T_m(sqrt(n+1))/sqrt(n+1) and U_{m-1}(sqrt(n+1)) are
// polynomials in n of degree (m-1)/2 with leading coefficient 2^{m-1}.
struct ChebyshevPair {
  long m = 1;
  PolyQ t_reduced;  // T_m(sqrt(n+1)) / sqrt(n+1)
  PolyQ u;          // U_{m-1}(sqrt(n+1))
};

// Via the step-two recurrence f_{m+2} = (4n+2) f_m - f_{m-2}.
ChebyshevPair chebyshev_pair(long m);

// All pairs for odd m' <= m, computed in one recurrence sweep.
std::vector<ChebyshevPair> chebyshev_pairs_up_to(long m);

enum class ChebKind { first, second };

// Bisected generating functions with polynomial coefficients:
// first:  (1-z) / (1 - 2(2n+1)z + z^2)   -> coefficient (m-1)/2 is t_reduced
// second: (1+z) / (1 - 2(2n+1)z + z^2)   -> coefficient (m-1)/2 is u
Series<PolyQ> chebyshev_series(ChebKind kind, std::size_t order);

// Numeric spot check of
// (sqrt(n) - sqrt(n+1))^m = sqrt(n) u(n) - sqrt(n+1) t_reduced(n)
// within the tracked enclosure at the given precision.
bool sqrt_power_identity_holds(long m, long n, mpfr_prec_t precision);

// The two weighted Chebyshev sums in Q[n]:
//   sum_i A_i t_reduced_i = P_k(n+1) - (n+1)^{(k-1)/2}
//   sum_i A_i u_i         = P_k(n)
bool chebyshev_sum_identities_hold(long k);

// Expands every term of the telescoping difference of the half-power
// decomposition into sqrt(n)- and sqrt(n+1)-components over Q[n], using a
// direct binomial expansion of (sqrt(n) - sqrt(n+1))^i, and checks both
// components vanish identically.
bool telescoping_difference_vanishes(long k);

}  // namespace halfpow

#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "halfpow/bernoulli.hpp"
#include "halfpow/catalan.hpp"
#include "halfpow/errors.hpp"
#include "halfpow/polynomial.hpp"
#include "halfpow/rational.hpp"
#include "halfpow/series.hpp"

namespace halfpow {

// Coefficients A_i multiplying tau(n, i), keyed by odd i in [1, k+2].
// Forced zeros are stored explicitly so downstream iteration is uniform.
using TauCoeffMap = std::map<long, Rational>;

enum class Route { direct, bernoulli_gf, catalan_gf, cross_checked };

const char* route_name(Route route);

// The exact ingredients of the half-power sum decomposition
//   sum_{i=1}^n i^{k/2} = C_k + sqrt(n) P_k(n) + sum_i A_i tau(n, i)
// for one odd k: the polynomial part and the tau coefficients.
struct Decomposition {
  long k = 1;
  PolyQ poly_part;          // degree (k+1)/2
  TauCoeffMap tau_coeffs;   // odd i in [1, k+2]
  Route route = Route::direct;
};

// The closed double-sum formula for the tau coefficients.
TauCoeffMap tau_coeffs_direct(long k);

// Generating-function route: extraction from (1+z)^{k+2} B_{k/2+1}(4z/(1+z)^2).
TauCoeffMap tau_coeffs_bernoulli_gf(long k);

// Catalan route: extraction from C(z/4)^i (1-z)^{-1/2} B_{k/2+1}(z).
TauCoeffMap tau_coeffs_catalan_gf(long k);

// The polynomial part from its coefficient formula.
PolyQ poly_part_direct(long k);

// The polynomial part extracted from B_{k/2+1}(-z) (1-nz)^{-1} over
// series with polynomial coefficients.
PolyQ poly_part_gf(long k);

// Closed polynomial form of sum_{i=1}^n i^p for integer p >= 0.
PolyQ faulhaber_polynomial(std::size_t p);

enum class SumVariant {
  catalan_plus,   // via B(z), C(z/4), factor (2-C)/(1-z), F(C-1)
  catalan_minus,  // via B(-z), C(-z/4), factor (2-C)/(1+z), F(1-C)
};

// sum over odd i of A_i * [z^{(i-1)/2}] F, evaluated through the closed
// generating-function form; works over any exact ring R constructible from
// Rational. Requires order(F) >= (k+3)/2 so the extraction window is known.
template <typename R>
R tau_weighted_sum(long k, const Series<R>& f, SumVariant variant);

// Computes every route, asserts they agree together with the zero pattern
// and the fixed leading coefficients, and assembles the result.
// Throws RouteMismatch on any internal inconsistency.
Decomposition decomposition(long k);

namespace detail {
void require_odd_k(long k);
std::size_t working_order(long k);  // (k+3)/2 + 2
}  // namespace detail

template <typename R>
R tau_weighted_sum(long k, const Series<R>& f, SumVariant variant) {
  detail::require_odd_k(k);
  const std::size_t n = detail::working_order(k);
  const std::size_t target = static_cast<std::size_t>((k + 1) / 2);
  if (f.order() < target + 1) {
    throw OrderExceeded("tau_weighted_sum: order(F) must be at least (k+3)/2");
  }
  const Rational half_k_plus_1 = Rational(k, 2) + Rational(1);

  Series<Rational> bern = bernoulli_series(half_k_plus_1, n);
  Series<Rational> cat = catalan_quarter_series(n);
  Series<Rational> one = Series<Rational>::constant(Rational(1), n);
  Series<Rational> factor, inner;
  if (variant == SumVariant::catalan_plus) {
    factor = (one * Rational(2) - cat) * geometric_series<Rational>(Rational(1), n);
    inner = cat - one;
  } else {
    bern = bern.with_negated_argument();
    Series<Rational> cat_neg = cat.with_negated_argument();
    factor = (one * Rational(2) - cat_neg) *
             geometric_series<Rational>(Rational(-1), n);
    inner = one - cat_neg;
  }
  Series<R> product = lift<R>(bern) * lift<R>(factor) *
                      compose(f, lift<R>(inner));
  return product.at(target) * R(Rational(1) / half_k_plus_1);
}

}  // namespace halfpow

#include "halfpow/decomposition.hpp"

#include <string>
#include <utility>
#include <vector>

namespace halfpow {

namespace detail {

void require_odd_k(long k) {
  if (k < 1 || k % 2 == 0) {
    throw InvalidK("k must be an odd positive integer, got " +
                   std::to_string(k));
  }
}

std::size_t working_order(long k) {
  // Window for every series route at level k. The extraction never reads
  // past exponent (k+1)/2; the margin of 2 keeps the A_1 argument of the
  // zero-pattern proof checkable at exponent (k+3)/2.
  return static_cast<std::size_t>((k + 3) / 2 + 2);
}

}  // namespace detail

namespace {

Rational two_to(long e) {
  mpz_class p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(std::move(p));
}

}  // namespace

const char* route_name(Route route) {
  switch (route) {
    case Route::direct: return "direct";
    case Route::bernoulli_gf: return "bernoulli_gf";
    case Route::catalan_gf: return "catalan_gf";
    case Route::cross_checked: return "cross_checked";
  }
  return "unknown";
}

TauCoeffMap tau_coeffs_direct(long k) {
  detail::require_odd_k(k);
  const Rational alpha = Rational(k, 2) + Rational(1);
  const std::vector<Rational> bern =
      shared_bernoulli_prefix(static_cast<std::size_t>((k + 1) / 2 + 2));
  TauCoeffMap out;
  for (long i = 1; i <= k + 2; i += 2) {
    const long top = (k - i) / 2 + 1;
    Rational acc(0);
    Rational four_j(1);
    for (long j = 0; j <= top; ++j) {
      acc += binomial(Rational(2 * j + i), static_cast<unsigned long>(j)) /
             four_j *
             binomial(alpha, static_cast<unsigned long>(top - j)) *
             bern[static_cast<std::size_t>(top - j)];
      four_j *= Rational(4);
    }
    out[i] = acc / (alpha * two_to(i - 1));
  }
  return out;
}

TauCoeffMap tau_coeffs_bernoulli_gf(long k) {
  detail::require_odd_k(k);
  const Rational alpha = Rational(k, 2) + Rational(1);
  const std::size_t n = detail::working_order(k);
  // 4z/(1+z)^2, with a zero constant term by construction.
  Series<Rational> inner = (binomial_series(Rational(-2), Rational(1), n) *
                            Rational(4))
                               .shifted_up(1)
                               .truncated(n);
  Series<Rational> composed = compose(bernoulli_series(alpha, n), inner);
  Series<Rational> g =
      composed * binomial_series(Rational(k + 2), Rational(1), n);
  const Rational scale = alpha * two_to(k + 1);
  TauCoeffMap out;
  for (long i = 1; i <= k + 2; i += 2) {
    out[i] = g.at(static_cast<std::size_t>((k - i) / 2 + 1)) / scale;
  }
  return out;
}

TauCoeffMap tau_coeffs_catalan_gf(long k) {
  detail::require_odd_k(k);
  const Rational alpha = Rational(k, 2) + Rational(1);
  const std::size_t n = detail::working_order(k);
  const Series<Rational> base =
      binomial_series(Rational(-1, 2), Rational(-1), n) *
      bernoulli_series(alpha, n);
  const Series<Rational> cat = catalan_quarter_series(n);
  const Series<Rational> cat_sq = cat * cat;
  Series<Rational> cat_power = cat;  // C(z/4)^i, advanced two steps at a time
  TauCoeffMap out;
  for (long i = 1; i <= k + 2; i += 2) {
    out[i] = (base * cat_power).at(static_cast<std::size_t>((k - i) / 2 + 1)) /
             (alpha * two_to(i - 1));
    cat_power = cat_power * cat_sq;
  }
  return out;
}

PolyQ poly_part_direct(long k) {
  detail::require_odd_k(k);
  const Rational alpha = Rational(k, 2) + Rational(1);
  const std::size_t deg = static_cast<std::size_t>((k + 1) / 2);
  const std::vector<Rational> bern = shared_bernoulli_prefix(deg + 1);
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  Rational sign(1);
  for (std::size_t i = 0; i <= deg; ++i) {
    coeffs[deg - i] = binomial(alpha, i) * sign * bern[i] / alpha;
    sign = -sign;
  }
  return PolyQ(std::move(coeffs));
}

PolyQ poly_part_gf(long k) {
  detail::require_odd_k(k);
  const Rational alpha = Rational(k, 2) + Rational(1);
  const std::size_t n = detail::working_order(k);
  Series<PolyQ> bern_neg =
      lift<PolyQ>(bernoulli_series(alpha, n).with_negated_argument());
  Series<PolyQ> geometric = geometric_series<PolyQ>(PolyQ::variable(), n);
  PolyQ extracted =
      (bern_neg * geometric).at(static_cast<std::size_t>((k + 1) / 2));
  return extracted / alpha;
}

PolyQ faulhaber_polynomial(std::size_t p) {
  const std::vector<Rational> bern = shared_bernoulli_prefix(p + 1);
  std::vector<Rational> coeffs(p + 2, Rational(0));
  Rational sign(1);
  const Rational scale(static_cast<long>(p) + 1);
  for (std::size_t i = 0; i <= p; ++i) {
    coeffs[p + 1 - i] =
        Rational(binomial_int(p + 1, i)) * sign * bern[i] / scale;
    sign = -sign;
  }
  return PolyQ(std::move(coeffs));
}

Decomposition decomposition(long k) {
  detail::require_odd_k(k);
  TauCoeffMap direct = tau_coeffs_direct(k);
  const TauCoeffMap gf = tau_coeffs_bernoulli_gf(k);
  const TauCoeffMap catalan = tau_coeffs_catalan_gf(k);
  if (direct != gf || direct != catalan) {
    throw RouteMismatch("tau coefficient routes disagree at k = " +
                        std::to_string(k));
  }
  PolyQ poly = poly_part_direct(k);
  if (poly != poly_part_gf(k)) {
    throw RouteMismatch("polynomial part routes disagree at k = " +
                        std::to_string(k));
  }

  // Zero pattern: A_1 = 0, and A_i = 0 whenever (k-i)/2 is even.
  for (const auto& [i, value] : direct) {
    const bool forced_zero = (i == 1) || (((k - i) / 2) % 2 == 0);
    if (forced_zero && !value.is_zero()) {
      throw RouteMismatch("zero pattern violated at k = " + std::to_string(k) +
                          ", i = " + std::to_string(i));
    }
  }
  // Fixed top coefficients of the polynomial part.
  if (poly.leading_coeff() != Rational(2, k + 2) ||
      poly.coeff(static_cast<std::size_t>((k - 1) / 2)) != Rational(1, 2)) {
    throw RouteMismatch("polynomial part leading coefficients wrong at k = " +
                        std::to_string(k));
  }

  Decomposition out;
  out.k = k;
  out.poly_part = std::move(poly);
  out.tau_coeffs = std::move(direct);
  out.route = Route::cross_checked;
  return out;
}

}  // namespace halfpow

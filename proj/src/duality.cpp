#include "halfpow/duality.hpp"

#include "halfpow/bernoulli.hpp"
#include "halfpow/errors.hpp"

namespace halfpow {

Rational bernoulli_dual_coeff(const Series<Rational>& h, const Rational& alpha,
                              std::size_t m) {
  if (h.order() <= m) {
    throw OrderExceeded("bernoulli_dual_coeff: order(h) must exceed m");
  }
  const std::size_t n = m + 1;
  // z/(1+z) = z - z^2 + z^3 - ...
  Series<Rational> inner = geometric_series<Rational>(Rational(-1), n + 1)
                               .shifted_up(1)
                               .truncated(n);
  Series<Rational> substituted = compose(h.truncated(n), inner);
  Series<Rational> power = binomial_series(
      Rational(static_cast<long>(m) - 1) - alpha, Rational(1), n);
  Series<Rational> bern_neg = bernoulli_series(alpha, n).with_negated_argument();
  return (substituted * power * bern_neg).at(m);
}

bool duality_holds(const Series<Rational>& h, const Rational& alpha,
                   std::size_t m) {
  const Rational direct = (h.truncated(m + 1) * bernoulli_series(alpha, m + 1)).at(m);
  return direct == bernoulli_dual_coeff(h, alpha, m);
}

Rational lagrange_burmann_rhs(const Series<Rational>& H, std::size_t m) {
  if (H.order() <= m) {
    throw OrderExceeded("lagrange_burmann_rhs: order(H) must exceed m");
  }
  const std::size_t n = m + 1;
  // g(z) = z/(1-z) = z + z^2 + ...
  Series<Rational> g = geometric_series<Rational>(Rational(1), n + 1)
                           .shifted_up(1)
                           .truncated(n + 1);
  // g'(z) z / g(z): z/g(z) is the polynomial 1-z, so no series division
  // is needed.
  Series<Rational> factor =
      g.derivative() * to_series(PolyQ({Rational(1), Rational(-1)}), n);
  Series<Rational> composed = compose(H.truncated(n), g.truncated(n));
  return (composed * factor).at(m);
}

bool lagrange_burmann_holds(const Series<Rational>& H, std::size_t m) {
  const std::size_t n = m + 1;
  const Rational direct =
      (H.truncated(n) *
       binomial_series(Rational(static_cast<long>(m)), Rational(1), n))
          .at(m);
  return direct == lagrange_burmann_rhs(H, m);
}

}  // namespace halfpow

#include "halfpow/chebyshev.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "halfpow/approx_real.hpp"
#include "halfpow/decomposition.hpp"
#include "halfpow/errors.hpp"

namespace halfpow {

namespace {

void require_odd_m(long m) {
  if (m < 1 || m % 2 == 0) {
    throw InvalidM("m must be an odd positive integer, got " +
                   std::to_string(m));
  }
}

}  // namespace

std::vector<ChebyshevPair> chebyshev_pairs_up_to(long m) {
  require_odd_m(m);
  std::vector<ChebyshevPair> out;
  out.reserve(static_cast<std::size_t>((m + 1) / 2));
  const PolyQ step({Rational(2), Rational(4)});  // 4n + 2
  PolyQ t_prev, t_cur(Rational(1));              // t_1 = 1
  PolyQ u_prev, u_cur(Rational(1));              // u_1 = 1
  for (long mm = 1; mm <= m; mm += 2) {
    out.push_back({mm, t_cur, u_cur});
    PolyQ t_next = mm == 1 ? PolyQ({Rational(1), Rational(4)})   // t_3 = 4n+1
                           : step * t_cur - t_prev;
    PolyQ u_next = mm == 1 ? PolyQ({Rational(3), Rational(4)})   // u_3 = 4n+3
                           : step * u_cur - u_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
    u_prev = std::move(u_cur);
    u_cur = std::move(u_next);
  }
  return out;
}

ChebyshevPair chebyshev_pair(long m) {
  return chebyshev_pairs_up_to(m).back();
}

Series<PolyQ> chebyshev_series(ChebKind kind, std::size_t order) {
  // 1 - 2(2n+1)z + z^2
  std::vector<PolyQ> den_coeffs(std::max<std::size_t>(order, 3), PolyQ(0));
  den_coeffs[0] = PolyQ(Rational(1));
  den_coeffs[1] = PolyQ({Rational(-2), Rational(-4)});
  den_coeffs[2] = PolyQ(Rational(1));
  Series<PolyQ> inverse =
      inverse_unit(Series<PolyQ>(std::move(den_coeffs)).truncated(order));
  std::vector<PolyQ> num(order, PolyQ(0));
  if (order > 0) num[0] = PolyQ(Rational(1));
  if (order > 1) {
    num[1] = kind == ChebKind::first ? PolyQ(Rational(-1)) : PolyQ(Rational(1));
  }
  return Series<PolyQ>(std::move(num)) * inverse;
}

bool sqrt_power_identity_holds(long m, long n, mpfr_prec_t precision) {
  require_odd_m(m);
  if (n < 0) throw NegativeInput("n must be nonnegative");
  precision = std::max<mpfr_prec_t>(precision, 64);
  const ChebyshevPair pair = chebyshev_pair(m);
  const ApproxReal root_n = sqrt_rational(Rational(n), precision);
  const ApproxReal root_n1 = sqrt_rational(Rational(n + 1), precision);
  const ApproxReal lhs =
      pow_int(root_n - root_n1, static_cast<unsigned long>(m));
  const ApproxReal rhs = root_n.scaled(pair.u(Rational(n))) -
                         root_n1.scaled(pair.t_reduced(Rational(n)));
  return (lhs - rhs).contains_zero();
}

bool chebyshev_sum_identities_hold(long k) {
  detail::require_odd_k(k);
  const TauCoeffMap coeffs = tau_coeffs_direct(k);
  const std::vector<ChebyshevPair> pairs = chebyshev_pairs_up_to(k + 2);
  PolyQ sum_t, sum_u;
  for (const ChebyshevPair& pair : pairs) {
    const Rational& a = coeffs.at(pair.m);
    sum_t += pair.t_reduced * a;
    sum_u += pair.u * a;
  }
  const PolyQ poly = poly_part_direct(k);
  const PolyQ n_plus_1({Rational(1), Rational(1)});
  const PolyQ expected_t =
      poly.shifted(Rational(1)) -
      n_plus_1.pow(static_cast<unsigned long>((k - 1) / 2));
  return sum_t == expected_t && sum_u == poly;
}

bool telescoping_difference_vanishes(long k) {
  detail::require_odd_k(k);
  const TauCoeffMap coeffs = tau_coeffs_direct(k);
  const PolyQ poly = poly_part_direct(k);
  const PolyQ n_plus_1({Rational(1), Rational(1)});

  // Powers of n and n+1 up to exponent (k+1)/2.
  const std::size_t max_e = static_cast<std::size_t>((k + 1) / 2) + 1;
  std::vector<PolyQ> pow_n(max_e + 1), pow_n1(max_e + 1);
  pow_n[0] = PolyQ(Rational(1));
  pow_n1[0] = PolyQ(Rational(1));
  for (std::size_t e = 1; e <= max_e; ++e) {
    pow_n[e] = pow_n[e - 1] * PolyQ::variable();
    pow_n1[e] = pow_n1[e - 1] * n_plus_1;
  }

  // (sqrt(n) - sqrt(n+1))^i expanded by the binomial theorem and split into
  // sqrt(n)*S_i(n) + sqrt(n+1)*C_i(n); this route does not reuse the
  // Chebyshev recurrence.
  PolyQ root_n_component;   // collects sqrt(n) * (...)
  PolyQ root_n1_component;  // collects sqrt(n+1) * (...)
  for (const auto& [i, a] : coeffs) {
    PolyQ s_i, c_i;
    for (long j = 0; j <= i; ++j) {
      const Rational coeff(binomial_int(static_cast<unsigned long>(i),
                                        static_cast<unsigned long>(j)));
      if (j % 2 == 1) {
        // odd power of sqrt(n); (-1)^{i-j} = +1 since i-j is even
        s_i += pow_n[static_cast<std::size_t>((j - 1) / 2)] *
               pow_n1[static_cast<std::size_t>((i - j) / 2)] * coeff;
      } else {
        // odd power of sqrt(n+1); (-1)^{i-j} = -1
        c_i -= pow_n[static_cast<std::size_t>(j / 2)] *
               pow_n1[static_cast<std::size_t>((i - j - 1) / 2)] * coeff;
      }
    }
    root_n_component += s_i * a;
    root_n1_component += c_i * a;
  }

  // phi_k(n) - phi_k(n+1) =
  //   -(n+1)^{k/2} - sqrt(n) P_k(n) + sqrt(n+1) P_k(n+1) + sum_i A_i (...)^i
  root_n_component -= poly;
  root_n1_component += poly.shifted(Rational(1)) -
                       pow_n1[static_cast<std::size_t>((k - 1) / 2)];
  return root_n_component.is_zero() && root_n1_component.is_zero();
}

}  // namespace halfpow

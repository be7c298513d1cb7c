#include <doctest.h>

#include "halfpow/chebyshev.hpp"
#include "halfpow/errors.hpp"

using namespace halfpow;

TEST_CASE("reduced Chebyshev polynomials for small odd m") {
  const ChebyshevPair p1 = chebyshev_pair(1);
  CHECK(p1.t_reduced == PolyQ(Rational(1)));
  CHECK(p1.u == PolyQ(Rational(1)));

  // T_3(x) = 4x^3 - 3x and U_2(x) = 4x^2 - 1 at x^2 = n+1
  const ChebyshevPair p3 = chebyshev_pair(3);
  CHECK(p3.t_reduced == PolyQ({Rational(1), Rational(4)}));
  CHECK(p3.u == PolyQ({Rational(3), Rational(4)}));

  CHECK_THROWS_AS(chebyshev_pair(2), InvalidM);
  CHECK_THROWS_AS(chebyshev_pair(-1), InvalidM);
}

TEST_CASE("degree and leading coefficient invariants") {
  for (const ChebyshevPair& pair : chebyshev_pairs_up_to(31)) {
    const auto deg = static_cast<std::size_t>((pair.m - 1) / 2);
    CHECK(pair.t_reduced.degree() == deg);
    CHECK(pair.u.degree() == deg);
    const Rational lead = Rational(mpz_class(mpz_class(1) << (pair.m - 1)));
    CHECK(pair.t_reduced.leading_coeff() == lead);
    CHECK(pair.u.leading_coeff() == lead);
  }
}

TEST_CASE("pell-type identity (n+1) t^2 - n u^2 = 1") {
  const PolyQ n_plus_1({Rational(1), Rational(1)});
  for (const ChebyshevPair& pair : chebyshev_pairs_up_to(31)) {
    CHECK(n_plus_1 * pair.t_reduced * pair.t_reduced -
              PolyQ::variable() * pair.u * pair.u ==
          PolyQ(Rational(1)));
  }
}

TEST_CASE("bisected generating functions match the recurrence route") {
  const auto t_series = chebyshev_series(ChebKind::first, 16);
  const auto u_series = chebyshev_series(ChebKind::second, 16);
  CHECK(t_series.at(0) == PolyQ(Rational(1)));
  CHECK(u_series.at(0) == PolyQ(Rational(1)));
  // expanding (1+z)/(1-2(2n+1)z+z^2) to z^1 gives (4n+2)+1
  CHECK(u_series.at(1) == PolyQ({Rational(3), Rational(4)}));
  for (const ChebyshevPair& pair : chebyshev_pairs_up_to(31)) {
    const auto at = static_cast<std::size_t>((pair.m - 1) / 2);
    CHECK(t_series.at(at) == pair.t_reduced);
    CHECK(u_series.at(at) == pair.u);
  }
}

TEST_CASE("numeric square-root power identity") {
  // m=1, n=0: both sides are -1
  CHECK(sqrt_power_identity_holds(1, 0, 128));
  // m=3, n=1: (1-sqrt2)^3 = 7 - 5 sqrt2 by hand expansion
  CHECK(sqrt_power_identity_holds(3, 1, 128));
  CHECK(sqrt_power_identity_holds(5, 3, 256));
  for (long m = 1; m <= 13; m += 2) {
    for (long n = 0; n <= 6; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(sqrt_power_identity_holds(m, n, 128));
    }
  }
}

TEST_CASE("weighted sums against the shifted polynomial part") {
  // k=1: (1/6)(4n+1) = P_1(n+1) - 1 and (1/6)(4n+3) = P_1(n), by hand
  CHECK(chebyshev_sum_identities_hold(1));
  CHECK(chebyshev_sum_identities_hold(15));
  for (long k = 1; k <= 31; k += 2) {
    CAPTURE(k);
    CHECK(chebyshev_sum_identities_hold(k));
  }
  CHECK_THROWS_AS(chebyshev_sum_identities_hold(2), InvalidK);
}

TEST_CASE("telescoping difference vanishes identically") {
  CHECK(telescoping_difference_vanishes(1));
  CHECK(telescoping_difference_vanishes(7));
  CHECK(telescoping_difference_vanishes(31));
  for (long k = 1; k <= 31; k += 2) {
    CAPTURE(k);
    CHECK(telescoping_difference_vanishes(k));
  }
}

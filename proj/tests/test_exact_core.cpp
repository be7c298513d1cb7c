#include <doctest.h>

#include <random>

#include "halfpow/polynomial.hpp"
#include "halfpow/rational.hpp"
#include "oracles.hpp"

using namespace halfpow;

TEST_CASE("rationals normalize eagerly and compare structurally") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, -9).denominator() == 3);
  CHECK(Rational(3, -9).numerator() == -1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK((-a).to_string() == "-1/3");
  CHECK(Rational(7, 2).pow(2) == Rational(49, 4));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = oracle::random_rational(rng, 50, 20);
    const Rational b = oracle::random_rational(rng, 50, 20);
    const Rational c = oracle::random_rational(rng, 50, 20);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("binomial with rational upper argument") {
  // empty product and binom(alpha, 1) = alpha
  CHECK(binomial(Rational(5, 2), 0) == Rational(1));
  CHECK(binomial(Rational(5, 2), 1) == Rational(5, 2));
  // (1/2)(−1/2)/2! = −1/8, checked by hand
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  // agrees with the integer binomial when alpha is a nonnegative integer
  for (long n = 0; n <= 10; ++n) {
    for (unsigned long r = 0; r <= 12; ++r) {
      const Rational expected =
          r <= static_cast<unsigned long>(n)
              ? Rational(binomial_int(static_cast<unsigned long>(n), r))
              : Rational(0);
      CHECK(binomial(Rational(n), r) == expected);
    }
  }
}

TEST_CASE("polynomial evaluation is exact Horner") {
  // P_1(1) = 2/3 + 1/2 = 7/6
  const PolyQ p({Rational(1, 2), Rational(2, 3)});
  CHECK(p(Rational(1)) == Rational(7, 6));
  CHECK(PolyQ()(Rational(11, 3)) == Rational(0));
  CHECK(PolyQ::monomial(Rational(1), 2)(Rational(3)) == Rational(9));
}

TEST_CASE("polynomial shift") {
  CHECK(PolyQ::variable().shifted(Rational(1)) ==
        PolyQ({Rational(1), Rational(1)}));
  CHECK(PolyQ::monomial(Rational(1), 2).shifted(Rational(1)) ==
        PolyQ({Rational(1), Rational(2), Rational(1)}));
  // P_1(n+1) = 2/3 n + 7/6, expanded by hand
  CHECK(PolyQ({Rational(1, 2), Rational(2, 3)}).shifted(Rational(1)) ==
        PolyQ({Rational(7, 6), Rational(2, 3)}));
}

TEST_CASE("shift round-trips on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const PolyQ p = oracle::random_poly(rng, 20);
    const Rational c = oracle::random_rational(rng, 9, 5);
    CHECK(p.shifted(c).shifted(-c) == p);
  }
}

TEST_CASE("zero polynomial has absent degree, never -1") {
  CHECK_FALSE(PolyQ().degree().has_value());
  CHECK(PolyQ().is_zero());
  CHECK(PolyQ(Rational(0)).is_zero());
  // trailing zeros trim away
  CHECK(PolyQ({Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK((PolyQ::variable() - PolyQ::variable()).is_zero());
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const PolyQ p = oracle::random_poly(rng, 9);
    const PolyQ q = oracle::random_poly(rng, 9);
    const Rational x = oracle::random_rational(rng, 7, 4);
    CHECK((p * q)(x) == p(x) * q(x));
    CHECK((p + q)(x) == p(x) + q(x));
  }
}

TEST_CASE("polynomial ring sanity") {
  const PolyQ n = PolyQ::variable();
  CHECK((n + PolyQ(1)) * (n - PolyQ(1)) ==
        PolyQ({Rational(-1), Rational(0), Rational(1)}));
  CHECK((n * Rational(1, 2)).to_string() == "1/2 n");
  CHECK(PolyQ({Rational(1, 8), Rational(1, 2), Rational(2, 5)}).to_string() ==
        "2/5 n^2 + 1/2 n + 1/8");
  CHECK(PolyQ({Rational(0), Rational(-7, 3)}).to_string() == "-7/3 n");
}

#include <doctest.h>

#include <random>
#include <thread>

#include "halfpow/decomposition.hpp"
#include "halfpow/errors.hpp"
#include "oracles.hpp"

using namespace halfpow;

namespace {

// The published coefficient sets for small k, frozen as test anchors.
void check_k1(const TauCoeffMap& a) {
  REQUIRE(a.size() == 2);
  CHECK(a.at(1) == Rational(0));
  CHECK(a.at(3) == Rational(1, 6));
}

void check_k5(const TauCoeffMap& a) {
  CHECK(a.at(1) == Rational(0));
  CHECK(a.at(3) == Rational(-1, 96));
  CHECK(a.at(5) == Rational(0));
  CHECK(a.at(7) == Rational(1, 224));
}

void check_k7(const TauCoeffMap& a) {
  CHECK(a.at(3) == Rational(0));
  CHECK(a.at(5) == Rational(-1, 192));
  CHECK(a.at(7) == Rational(0));
  CHECK(a.at(9) == Rational(1, 1152));
}

}  // namespace

TEST_CASE("direct route reproduces the published coefficients") {
  check_k1(tau_coeffs_direct(1));
  check_k5(tau_coeffs_direct(5));
  const TauCoeffMap k9 = tau_coeffs_direct(9);
  CHECK(k9.at(1) == Rational(0));
  CHECK(k9.at(3) == Rational(1, 256));
  CHECK(k9.at(5) == Rational(0));
  CHECK(k9.at(7) == Rational(-1, 512));
  CHECK(k9.at(9) == Rational(0));
  CHECK(k9.at(11) == Rational(1, 5632));
}

TEST_CASE("generating-function route reproduces the published coefficients") {
  check_k1(tau_coeffs_bernoulli_gf(1));
  check_k7(tau_coeffs_bernoulli_gf(7));
  CHECK(tau_coeffs_bernoulli_gf(13).at(3) == Rational(-143, 40960));
}

TEST_CASE("catalan route reproduces the published coefficients") {
  const TauCoeffMap k11 = tau_coeffs_catalan_gf(11);
  CHECK(k11.at(5) == Rational(33, 10240));
  CHECK(k11.at(9) == Rational(-1, 1536));
  CHECK(k11.at(13) == Rational(1, 26624));
  CHECK(tau_coeffs_catalan_gf(15).at(17) == Rational(1, 557056));
  for (long k = 1; k <= 21; k += 2) {
    CHECK(tau_coeffs_catalan_gf(k).at(1) == Rational(0));
  }
}

TEST_CASE("polynomial part, both routes") {
  CHECK(poly_part_direct(1) == PolyQ({Rational(1, 2), Rational(2, 3)}));
  CHECK(poly_part_direct(3) ==
        PolyQ({Rational(1, 8), Rational(1, 2), Rational(2, 5)}));
  CHECK(poly_part_direct(7) ==
        PolyQ({Rational(-7, 384), Rational(0), Rational(7, 24), Rational(1, 2),
               Rational(2, 9)}));
  CHECK(poly_part_gf(1) == PolyQ({Rational(1, 2), Rational(2, 3)}));
  CHECK(poly_part_gf(5) ==
        PolyQ({Rational(0), Rational(5, 24), Rational(1, 2), Rational(2, 7)}));
  CHECK(poly_part_gf(3) == poly_part_direct(3));
}

TEST_CASE("the three coefficient routes agree exactly") {
  for (long k = 1; k <= 49; k += 2) {
    CAPTURE(k);
    const TauCoeffMap direct = tau_coeffs_direct(k);
    CHECK(direct == tau_coeffs_bernoulli_gf(k));
    CHECK(direct == tau_coeffs_catalan_gf(k));
    CHECK(poly_part_direct(k) == poly_part_gf(k));
  }
}

TEST_CASE("zero pattern holds far past the table") {
  for (long k = 1; k <= 99; k += 2) {
    CAPTURE(k);
    for (const auto& [i, value] : tau_coeffs_direct(k)) {
      if (i == 1 || ((k - i) / 2) % 2 == 0) {
        CHECK(value.is_zero());
      }
    }
  }
}

TEST_CASE("invalid k is rejected") {
  CHECK_THROWS_AS(tau_coeffs_direct(2), InvalidK);
  CHECK_THROWS_AS(tau_coeffs_direct(0), InvalidK);
  CHECK_THROWS_AS(tau_coeffs_direct(-3), InvalidK);
  CHECK_THROWS_AS(poly_part_gf(4), InvalidK);
  CHECK_THROWS_AS(decomposition(6), InvalidK);
}

TEST_CASE("faulhaber polynomials against direct summation") {
  CHECK(faulhaber_polynomial(0) == PolyQ::variable());
  CHECK(faulhaber_polynomial(1) ==
        PolyQ({Rational(0), Rational(1, 2), Rational(1, 2)}));
  CHECK(faulhaber_polynomial(3) ==
        PolyQ({Rational(0), Rational(0), Rational(1, 4), Rational(1, 2),
               Rational(1, 4)}));
  for (unsigned long p = 0; p <= 12; ++p) {
    const PolyQ poly = faulhaber_polynomial(p);
    for (long n = 1; n <= 30; ++n) {
      CHECK(poly(Rational(n)) == oracle::power_sum(n, p));
    }
  }
}

TEST_CASE("functional sum formulas match the direct weighted sum") {
  std::mt19937_64 rng(303);
  SUBCASE("fixed anchors") {
    // F = z at k = 1 picks out the single tau coefficient 1/6
    const Series<Rational> z(std::vector<Rational>{Rational(0), Rational(1),
                                                   Rational(0), Rational(0)});
    CHECK(tau_weighted_sum(1, z, SumVariant::catalan_plus) == Rational(1, 6));
    CHECK(tau_weighted_sum(1, z, SumVariant::catalan_minus) == Rational(1, 6));
    // a constant F picks out A_1 = 0
    for (long k : {1L, 5L, 9L, 15L}) {
      const auto one = Series<Rational>::constant(
          Rational(1), static_cast<std::size_t>((k + 3) / 2) + 1);
      CHECK(tau_weighted_sum(k, one, SumVariant::catalan_plus) == Rational(0));
      CHECK(tau_weighted_sum(k, one, SumVariant::catalan_minus) == Rational(0));
    }
  }
  SUBCASE("randomized polynomials for every small k") {
    for (long k = 1; k <= 15; k += 2) {
      const TauCoeffMap coeffs = tau_coeffs_direct(k);
      const std::size_t window = static_cast<std::size_t>((k + 3) / 2) + 1;
      for (int trial = 0; trial < 20; ++trial) {
        const Series<Rational> f = to_series(
            oracle::random_poly(rng, static_cast<std::size_t>((k + 1) / 2)),
            window);
        Rational direct(0);
        for (const auto& [i, a] : coeffs) {
          direct += a * f.at(static_cast<std::size_t>((i - 1) / 2));
        }
        CHECK(tau_weighted_sum(k, f, SumVariant::catalan_plus) == direct);
        CHECK(tau_weighted_sum(k, f, SumVariant::catalan_minus) == direct);
      }
    }
  }
  SUBCASE("insufficient window is rejected") {
    const auto f = Series<Rational>::constant(Rational(1), 2);
    CHECK_THROWS_AS(tau_weighted_sum(7, f, SumVariant::catalan_plus),
                    OrderExceeded);
  }
}

TEST_CASE("assembled decomposition") {
  const Decomposition d1 = decomposition(1);
  CHECK(d1.poly_part == PolyQ({Rational(1, 2), Rational(2, 3)}));
  check_k1(d1.tau_coeffs);
  CHECK(d1.route == Route::cross_checked);
  CHECK(std::string(route_name(d1.route)) == "cross_checked");

  const Decomposition d3 = decomposition(3);
  CHECK(d3.poly_part == PolyQ({Rational(1, 8), Rational(1, 2), Rational(2, 5)}));
  CHECK(d3.tau_coeffs.at(3) == Rational(0));
  CHECK(d3.tau_coeffs.at(5) == Rational(1, 40));

  const Decomposition d15 = decomposition(15);
  CHECK(d15.tau_coeffs.at(5) == Rational(-65, 16384));
  CHECK(d15.tau_coeffs.at(9) == Rational(41, 49152));
  CHECK(d15.tau_coeffs.at(13) == Rational(-1, 16384));
  CHECK(d15.tau_coeffs.at(17) == Rational(1, 557056));

  // leading coefficients pinned for every level we assemble
  for (long k = 1; k <= 25; k += 2) {
    const Decomposition d = decomposition(k);
    CHECK(d.poly_part.leading_coeff() == Rational(2, k + 2));
    CHECK(d.poly_part.coeff(static_cast<std::size_t>((k - 1) / 2)) ==
          Rational(1, 2));
  }
}

TEST_CASE("decompositions for distinct k run in parallel") {
  const long ks[] = {1, 7, 15, 23, 31, 39};
  std::vector<Decomposition> results(std::size(ks));
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < std::size(ks); ++t) {
    workers.emplace_back([&results, &ks, t] {
      results[t] = decomposition(ks[t]);
    });
  }
  for (auto& w : workers) w.join();
  for (std::size_t t = 0; t < std::size(ks); ++t) {
    CHECK(results[t].tau_coeffs == decomposition(ks[t]).tau_coeffs);
    CHECK(results[t].poly_part == decomposition(ks[t]).poly_part);
  }
}

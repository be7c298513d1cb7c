#include "halfpow/identity_suite.hpp"

#include <algorithm>
#include <random>

#include "halfpow/bernoulli.hpp"
#include "halfpow/catalan.hpp"
#include "halfpow/chebyshev.hpp"
#include "halfpow/decomposition.hpp"
#include "halfpow/duality.hpp"
#include "halfpow/series.hpp"

namespace halfpow {

namespace {

Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

PolyQ random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rational> coeffs(deg(rng) + 1);
  for (auto& c : coeffs) c = random_rational(rng, 6, 4);
  return PolyQ(std::move(coeffs));
}

bool bernoulli_recurrence_holds(std::size_t count) {
  const BernoulliTable table = bernoulli_numbers(count);
  for (std::size_t m = 1; m < count; ++m) {
    Rational acc(0);
    for (std::size_t j = 0; j <= m; ++j) {
      acc += Rational(binomial_int(m + 1, j)) * table[j];
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool zero_pattern_holds(long k) {
  for (const auto& [i, a] : tau_coeffs_direct(k)) {
    if ((i == 1 || ((k - i) / 2) % 2 == 0) && !a.is_zero()) return false;
  }
  return true;
}

bool faulhaber_matches_summation(std::size_t p_max, long n_max) {
  for (std::size_t p = 0; p <= p_max; ++p) {
    const PolyQ poly = faulhaber_polynomial(p);
    Rational running(0);
    for (long n = 1; n <= n_max; ++n) {
      running += Rational(n).pow(static_cast<long>(p));
      if (poly(Rational(n)) != running) return false;
    }
    if (!poly(Rational(0)).is_zero()) return false;
  }
  return true;
}

bool functional_sum_matches_direct(std::mt19937_64& rng) {
  for (long k = 1; k <= 15; k += 2) {
    const TauCoeffMap coeffs = tau_coeffs_direct(k);
    const std::size_t window = static_cast<std::size_t>((k + 3) / 2) + 1;
    for (int trial = 0; trial < 20; ++trial) {
      const Series<Rational> f =
          to_series(random_poly(rng, static_cast<std::size_t>((k + 1) / 2)),
                    window);
      Rational direct(0);
      for (const auto& [i, a] : coeffs) {
        direct += a * f.at(static_cast<std::size_t>((i - 1) / 2));
      }
      if (tau_weighted_sum(k, f, SumVariant::catalan_plus) != direct) {
        return false;
      }
      if (tau_weighted_sum(k, f, SumVariant::catalan_minus) != direct) {
        return false;
      }
    }
  }
  return true;
}

bool chebyshev_pell_holds(long m_max) {
  const PolyQ n_plus_1({Rational(1), Rational(1)});
  for (const ChebyshevPair& pair : chebyshev_pairs_up_to(m_max)) {
    const PolyQ lhs = n_plus_1 * pair.t_reduced * pair.t_reduced -
                      PolyQ::variable() * pair.u * pair.u;
    if (lhs != PolyQ(Rational(1))) return false;
  }
  return true;
}

bool chebyshev_series_matches_pairs(long m_max) {
  const std::size_t order = static_cast<std::size_t>((m_max + 1) / 2);
  const Series<PolyQ> t_series = chebyshev_series(ChebKind::first, order);
  const Series<PolyQ> u_series = chebyshev_series(ChebKind::second, order);
  for (const ChebyshevPair& pair : chebyshev_pairs_up_to(m_max)) {
    const std::size_t at = static_cast<std::size_t>((pair.m - 1) / 2);
    if (t_series.at(at) != pair.t_reduced) return false;
    if (u_series.at(at) != pair.u) return false;
  }
  return true;
}

// The closed forms behind the Chebyshev sums, as identities over series
// with polynomial coefficients:
//   (2-C(z/4))/(1-z)   T(C(z/4)-1)  = (1-(n+1)z)^{-1}   (sqrt(n+1) stripped)
//   (2-C(-z/4))/(1+z)  U(1-C(-z/4)) = (1-nz)^{-1}
bool chebyshev_series_instantiation_holds(std::size_t order) {
  const Series<Rational> cat = catalan_quarter_series(order);
  const Series<Rational> one = Series<Rational>::constant(Rational(1), order);

  Series<Rational> factor_plus = (one * Rational(2) - cat) *
                                 geometric_series<Rational>(Rational(1), order);
  Series<PolyQ> lhs_t = lift<PolyQ>(factor_plus) *
                        compose(chebyshev_series(ChebKind::first, order),
                                lift<PolyQ>(cat - one));
  Series<PolyQ> rhs_t =
      geometric_series<PolyQ>(PolyQ({Rational(1), Rational(1)}), order);
  if (!agree_through(lhs_t, rhs_t, order)) return false;

  const Series<Rational> cat_neg = cat.with_negated_argument();
  Series<Rational> factor_minus =
      (one * Rational(2) - cat_neg) *
      geometric_series<Rational>(Rational(-1), order);
  Series<PolyQ> lhs_u = lift<PolyQ>(factor_minus) *
                        compose(chebyshev_series(ChebKind::second, order),
                                lift<PolyQ>(one - cat_neg));
  Series<PolyQ> rhs_u = geometric_series<PolyQ>(PolyQ::variable(), order);
  return agree_through(lhs_u, rhs_u, order);
}

bool compose_associativity_holds(std::mt19937_64& rng, std::size_t order) {
  for (int trial = 0; trial < 30; ++trial) {
    const Series<Rational> f = to_series(random_poly(rng, 5), order);
    // inner series need zero constant terms
    std::vector<Rational> gc(order, Rational(0)), hc(order, Rational(0));
    for (std::size_t i = 1; i < order; ++i) {
      gc[i] = random_rational(rng, 4, 3);
      hc[i] = random_rational(rng, 4, 3);
    }
    const Series<Rational> g(std::move(gc));
    const Series<Rational> h(std::move(hc));
    if (compose(compose(f, g), h) != compose(f, compose(g, h))) return false;
  }
  return true;
}

bool binomial_product_law_holds(std::mt19937_64& rng, std::size_t order) {
  for (int trial = 0; trial < 30; ++trial) {
    const Rational alpha = random_rational(rng, 9, 2);
    const Rational beta = random_rational(rng, 9, 2);
    const Rational c = random_rational(rng, 3, 2);
    const Series<Rational> lhs = binomial_series(alpha, c, order) *
                                 binomial_series(beta, c, order);
    if (lhs != binomial_series(alpha + beta, c, order)) return false;
  }
  return true;
}

bool duality_random_holds(std::mt19937_64& rng, int instances) {
  std::uniform_int_distribution<long> halves(-9, 9);
  std::uniform_int_distribution<std::size_t> ms(0, 12);
  for (int trial = 0; trial < instances; ++trial) {
    const PolyQ h = random_poly(rng, 8);
    const Rational alpha(halves(rng), 2);
    const std::size_t m = ms(rng);
    if (!duality_holds(to_series(h, m + 2), alpha, m)) return false;
  }
  return true;
}

bool lagrange_burmann_random_holds(std::mt19937_64& rng, int instances) {
  std::uniform_int_distribution<std::size_t> ms(0, 10);
  for (int trial = 0; trial < instances; ++trial) {
    const PolyQ h = random_poly(rng, 6);
    const std::size_t m = ms(rng);
    if (!lagrange_burmann_holds(to_series(h, m + 2), m)) return false;
  }
  return true;
}

bool negation_random_holds(std::mt19937_64& rng, std::size_t order) {
  for (int trial = 0; trial < 50; ++trial) {
    if (!negation_identity_holds(random_rational(rng, 12, 5), order)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<CheckResult> run_identity_suite(
    const IdentitySuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  const std::size_t order = options.order;
  const long k_max = options.k_max - (options.k_max % 2 == 0 ? 1 : 0);
  std::vector<CheckResult> out;
  const auto record = [&out](std::string name, bool pass) {
    out.push_back({std::move(name), pass});
  };

  record("bernoulli.recurrence", bernoulli_recurrence_holds(40));
  record("bernoulli.negation", negation_random_holds(rng, order));
  {
    bool pass = true;
    for (std::size_t alpha = 0; alpha <= 20; ++alpha) {
      pass = pass && reciprocal_identity_holds(alpha);
    }
    record("bernoulli.reciprocal", pass);
  }
  {
    bool pass = true;
    for (long alpha = 1; alpha <= 10; ++alpha) {
      pass = pass && inverse_argument_identity_holds(alpha, 15);
    }
    record("bernoulli.inverse_argument", pass);
  }

  for (CatalanIdentity which :
       {CatalanIdentity::binomial_row, CatalanIdentity::sqrt_form,
        CatalanIdentity::argument_shift, CatalanIdentity::reflection,
        CatalanIdentity::self_convolution}) {
    record(std::string("catalan.") + catalan_identity_name(which),
           catalan_identity_holds(which, order));
  }

  record("series.duality", duality_random_holds(rng, 500));
  record("series.lagrange_burmann", lagrange_burmann_random_holds(rng, 200));
  record("series.compose_associativity",
         compose_associativity_holds(rng, std::min<std::size_t>(order, 12)));
  record("series.binomial_product",
         binomial_product_law_holds(rng, std::min<std::size_t>(order, 16)));

  {
    bool pass = true;
    for (long k = 1; k <= std::min<long>(k_max, 49); k += 2) {
      pass = pass && tau_coeffs_direct(k) == tau_coeffs_bernoulli_gf(k) &&
             tau_coeffs_direct(k) == tau_coeffs_catalan_gf(k) &&
             poly_part_direct(k) == poly_part_gf(k);
    }
    record("ramanujan.route_equivalence", pass);
  }
  {
    bool pass = true;
    for (long k = 1; k <= k_max; k += 2) pass = pass && zero_pattern_holds(k);
    record("ramanujan.zero_pattern", pass);
  }
  record("ramanujan.faulhaber", faulhaber_matches_summation(12, 30));
  record("ramanujan.functional_sum", functional_sum_matches_direct(rng));

  record("chebyshev.pell", chebyshev_pell_holds(std::min<long>(k_max, 31)));
  record("chebyshev.series_match",
         chebyshev_series_matches_pairs(std::min<long>(k_max, 31)));
  {
    bool sums = true, telescoping = true;
    for (long k = 1; k <= k_max; k += 2) {
      sums = sums && chebyshev_sum_identities_hold(k);
      telescoping = telescoping && telescoping_difference_vanishes(k);
    }
    record("chebyshev.sum_identities", sums);
    record("chebyshev.telescoping", telescoping);
  }
  record("chebyshev.series_instantiation",
         chebyshev_series_instantiation_holds(16));

  return out;
}

}  // namespace halfpow

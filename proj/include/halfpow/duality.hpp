#pragma once

#include <cstddef>

#include "halfpow/rational.hpp"
#include "halfpow/series.hpp"

namespace halfpow {

// [z^m] h(z/(1+z)) (1+z)^{m-1-alpha} B_alpha(-z), built from series
// primitives. By the Bernoulli duality this equals [z^m] h(z) B_alpha(z).
// Requires order(h) > m.
Rational bernoulli_dual_coeff(const Series<Rational>& h, const Rational& alpha,
                              std::size_t m);

// Checks the duality instance directly against [z^m] h(z) B_alpha(z).
bool duality_holds(const Series<Rational>& h, const Rational& alpha,
                   std::size_t m);

// Lagrange-Buermann instance for phi(z) = 1+z: the compositional inverse of
// z/phi(z) is g(z) = z/(1-z), and [z^m] H(z)(1+z)^m = [z^m] H(g(z)) g'(z)z/g(z).
// The first-order factor g'(z) z / g(z) is assembled from g itself.
Rational lagrange_burmann_rhs(const Series<Rational>& H, std::size_t m);

bool lagrange_burmann_holds(const Series<Rational>& H, std::size_t m);

}  // namespace halfpow

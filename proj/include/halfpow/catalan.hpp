#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "halfpow/rational.hpp"
#include "halfpow/series.hpp"

namespace halfpow {

// First `count` Catalan numbers via the closed form binom(2j, j) / (j+1).
std::vector<Rational> catalan_numbers(std::size_t count);

// The Catalan generating function C(z) = sum_j Cat_j z^j, truncated.
Series<Rational> catalan_series(std::size_t order);

// C(z/4): coefficient of z^j is Cat_j / 4^j.
Series<Rational> catalan_quarter_series(std::size_t order);

// The identity suite around C(z/4).
enum class CatalanIdentity {
  binomial_row,      // binom(2j+e, j)/4^j = [z^j] C(z/4)^e (1-z)^{-1/2}, odd e
  sqrt_form,         // C(z/4) = 2 (1 - (1-z)^{1/2}) / z
  argument_shift,    // C(z/(4(1+z))) = C(-z/4) (1+z)^{1/2}
  reflection,        // C(z/4)(1-z)^{-1/2} = 2((1-z)^{-1/2}-1)/z = (2-C(z/4))/(1-z)
  self_convolution,  // C(z/4)^2 z/4 = C(z/4) - 1
};

const char* catalan_identity_name(CatalanIdentity which);

bool catalan_identity_holds(CatalanIdentity which, std::size_t order);

}  // namespace halfpow

#pragma once

#include <cstddef>
#include <vector>

#include "halfpow/polynomial.hpp"
#include "halfpow/rational.hpp"
#include "halfpow/series.hpp"

namespace halfpow {

// First-kind Bernoulli numbers in the B_1 = -1/2 convention.
struct BernoulliTable {
  std::vector<Rational> values;  // values[i] = B_i

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }
};

// First `count` Bernoulli numbers, exact, from the defining recurrence
// sum_{j<=m} binom(m+1, j) B_j = 0 (m >= 1) with B_0 = 1.
BernoulliTable bernoulli_numbers(std::size_t count);

// Copy of the first `count` values from a process-wide table. Thread-safe;
// the table only ever grows.
std::vector<Rational> shared_bernoulli_prefix(std::size_t count);

// The series sum_i binom(alpha, i) B_i z^i, truncated. A polynomial when
// alpha is a nonnegative integer.
Series<Rational> bernoulli_series(const Rational& alpha, std::size_t order);

// The classical Bernoulli polynomial of integer degree alpha,
// sum_{i<=alpha} binom(alpha, i) B_i x^{alpha-i}, built with integer
// binomials as an independent code path.
PolyQ bernoulli_polynomial(std::size_t alpha);

// For integer alpha, the series above equals the coefficient-reversed
// Bernoulli polynomial z^alpha * Bbar_alpha(1/z).
bool reciprocal_identity_holds(std::size_t alpha);

// B_alpha(-z) = B_alpha(z) + alpha z up to the truncation order.
bool negation_identity_holds(const Rational& alpha, std::size_t order);

// B_alpha(-z/(1-z)) (1-z)^alpha = B_alpha(z), for nonnegative integer alpha.
bool inverse_argument_identity_holds(long alpha, std::size_t order);

}  // namespace halfpow

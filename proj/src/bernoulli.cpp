#include "halfpow/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace halfpow {

BernoulliTable bernoulli_numbers(std::size_t count) {
  BernoulliTable table;
  table.values.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    if (m == 0) {
      table.values.emplace_back(1);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} binom(m+1, j) B_j
    Rational acc(0);
    for (std::size_t j = 0; j < m; ++j) {
      acc += Rational(binomial_int(m + 1, j)) * table.values[j];
    }
    table.values.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return table;
}

std::vector<Rational> shared_bernoulli_prefix(std::size_t count) {
  static std::mutex mutex;
  static BernoulliTable table;
  std::lock_guard<std::mutex> lock(mutex);
  if (table.size() < count) {
    table = bernoulli_numbers(count + count / 2 + 8);
  }
  return std::vector<Rational>(table.values.begin(),
                               table.values.begin() +
                                   static_cast<long>(count));
}

Series<Rational> bernoulli_series(const Rational& alpha, std::size_t order) {
  const std::vector<Rational> b = shared_bernoulli_prefix(order);
  std::vector<Rational> out(order, Rational(0));
  Rational binom(1);
  for (std::size_t i = 0; i < order; ++i) {
    if (i > 0) {
      binom *= (alpha - Rational(static_cast<long>(i) - 1)) /
               Rational(static_cast<long>(i));
    }
    out[i] = binom * b[i];
  }
  return Series<Rational>(std::move(out));
}

PolyQ bernoulli_polynomial(std::size_t alpha) {
  const std::vector<Rational> b = shared_bernoulli_prefix(alpha + 1);
  std::vector<Rational> coeffs(alpha + 1, Rational(0));
  for (std::size_t i = 0; i <= alpha; ++i) {
    coeffs[alpha - i] = Rational(binomial_int(alpha, i)) * b[i];
  }
  return PolyQ(std::move(coeffs));
}

bool reciprocal_identity_holds(std::size_t alpha) {
  // Route one: the generic series with rational binomials. For integer
  // alpha every coefficient past index alpha vanishes.
  Series<Rational> series = bernoulli_series(Rational(static_cast<long>(alpha)),
                                             alpha + 3);
  for (std::size_t i = alpha + 1; i < series.order(); ++i) {
    if (!series[i].is_zero()) return false;
  }
  // Route two: reverse the classical Bernoulli polynomial.
  const PolyQ bbar = bernoulli_polynomial(alpha);
  for (std::size_t i = 0; i <= alpha; ++i) {
    if (series[i] != bbar.coeff(alpha - i)) return false;
  }
  return true;
}

bool negation_identity_holds(const Rational& alpha, std::size_t order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  Series<Rational> s = bernoulli_series(alpha, order);
  Series<Rational> lhs = s.with_negated_argument();
  Series<Rational> rhs =
      s + Series<Rational>::constant(alpha, order).shifted_up(1).truncated(order);
  return agree_through(lhs, rhs, order);
}

bool inverse_argument_identity_holds(long alpha, std::size_t order) {
  if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
  const Rational a(alpha);
  Series<Rational> base = bernoulli_series(a, order);
  // -z/(1-z) = -(z + z^2 + ...), known exactly to the working order.
  Series<Rational> inner =
      -geometric_series<Rational>(Rational(1), order + 1)
           .shifted_up(1)
           .truncated(order);
  Series<Rational> lhs =
      compose(bernoulli_series(a, order), inner) * binomial_series(a, Rational(-1), order);
  return agree_through(lhs, base, order);
}

}  // namespace halfpow

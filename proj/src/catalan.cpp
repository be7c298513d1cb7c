#include "halfpow/catalan.hpp"

#include <stdexcept>

namespace halfpow {

std::vector<Rational> catalan_numbers(std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(Rational(binomial_int(2 * j, j)) /
                  Rational(static_cast<long>(j) + 1));
  }
  return out;
}

Series<Rational> catalan_series(std::size_t order) {
  return Series<Rational>(catalan_numbers(order));
}

Series<Rational> catalan_quarter_series(std::size_t order) {
  std::vector<Rational> out = catalan_numbers(order);
  Rational scale(1);
  for (std::size_t j = 1; j < order; ++j) {
    scale /= Rational(4);
    out[j] *= scale;
  }
  return Series<Rational>(std::move(out));
}

const char* catalan_identity_name(CatalanIdentity which) {
  switch (which) {
    case CatalanIdentity::binomial_row: return "binomial_row";
    case CatalanIdentity::sqrt_form: return "sqrt_form";
    case CatalanIdentity::argument_shift: return "argument_shift";
    case CatalanIdentity::reflection: return "reflection";
    case CatalanIdentity::self_convolution: return "self_convolution";
  }
  return "unknown";
}

bool catalan_identity_holds(CatalanIdentity which, std::size_t order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  const std::size_t n = order;
  switch (which) {
    case CatalanIdentity::binomial_row: {
      const Series<Rational> weight = binomial_series(Rational(-1, 2), Rational(-1), n);
      const Series<Rational> cq = catalan_quarter_series(n);
      for (long e = 1; e <= 15; e += 2) {
        const Series<Rational> rhs = pow(cq, static_cast<unsigned long>(e)) * weight;
        Rational four_j(1);
        for (std::size_t j = 0; j < n; ++j) {
          const Rational lhs =
              binomial(Rational(2 * static_cast<long>(j) + e), j) / four_j;
          if (lhs != rhs.at(j)) return false;
          four_j *= Rational(4);
        }
      }
      return true;
    }
    case CatalanIdentity::sqrt_form: {
      // 2 (1 - (1-z)^{1/2}) / z
      Series<Rational> root = binomial_series(Rational(1, 2), Rational(-1), n + 1);
      Series<Rational> rhs =
          (Series<Rational>::constant(Rational(1), n + 1) - root)
              .shifted_down(1) *
          Rational(2);
      return agree_through(catalan_quarter_series(n), rhs, n);
    }
    case CatalanIdentity::argument_shift: {
      // z/(1+z) has a zero constant term, so the substitution is well formed.
      Series<Rational> inner = geometric_series<Rational>(Rational(-1), n + 1)
                                   .shifted_up(1)
                                   .truncated(n);
      Series<Rational> lhs = compose(catalan_quarter_series(n), inner);
      Series<Rational> rhs = catalan_quarter_series(n).with_negated_argument() *
                             binomial_series(Rational(1, 2), Rational(1), n);
      return agree_through(lhs, rhs, n);
    }
    case CatalanIdentity::reflection: {
      const Series<Rational> cq = catalan_quarter_series(n);
      Series<Rational> a = cq * binomial_series(Rational(-1, 2), Rational(-1), n);
      Series<Rational> b =
          (binomial_series(Rational(-1, 2), Rational(-1), n + 1) -
           Series<Rational>::constant(Rational(1), n + 1))
              .shifted_down(1) *
          Rational(2);
      Series<Rational> c = (Series<Rational>::constant(Rational(2), n) - cq) *
                           geometric_series<Rational>(Rational(1), n);
      return agree_through(a, b, n) && agree_through(b, c, n);
    }
    case CatalanIdentity::self_convolution: {
      const Series<Rational> cq = catalan_quarter_series(n + 1);
      Series<Rational> lhs =
          pow(cq.truncated(n), 2).shifted_up(1) * Rational(1, 4);
      Series<Rational> rhs =
          cq - Series<Rational>::constant(Rational(1), n + 1);
      return agree_through(lhs, rhs, n + 1);
    }
  }
  throw std::invalid_argument("unknown Catalan identity");
}

}  // namespace halfpow

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "halfpow/errors.hpp"
#include "halfpow/polynomial.hpp"
#include "halfpow/rational.hpp"

namespace halfpow {

// Truncated formal power series over an exact coefficient ring R.
//
// order() is the number of known coefficients: indices >= order() are
// unknown, not zero. Every operation carries the smallest window fully
// determined by its inputs and never silently extends it.
//
// R must be an exact commutative ring: default-constructible to zero,
// constructible from long, with +, -, *, unary - and exact ==.
template <typename R>
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {}

  static Series constant(const R& value, std::size_t order) {
    std::vector<R> c(order, R(0));
    if (order > 0) c[0] = value;
    return Series(std::move(c));
  }
  static Series zero(std::size_t order) {
    return Series(std::vector<R>(order, R(0)));
  }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<R>& coeffs() const { return coeffs_; }

  // Unchecked access; pre: i < order().
  const R& operator[](std::size_t i) const { return coeffs_[i]; }

  // Checked coefficient extraction.
  const R& at(std::size_t m) const {
    if (m >= coeffs_.size()) {
      throw OrderExceeded("series coefficient " + std::to_string(m) +
                          " requested, order is " +
                          std::to_string(coeffs_.size()));
    }
    return coeffs_[m];
  }

  // Restriction to a smaller window; never extends.
  Series truncated(std::size_t order) const {
    if (order > coeffs_.size()) {
      throw OrderExceeded("cannot truncate to order " + std::to_string(order) +
                          ", only " + std::to_string(coeffs_.size()) +
                          " coefficients known");
    }
    return Series(std::vector<R>(coeffs_.begin(),
                                 coeffs_.begin() + static_cast<long>(order)));
  }

  // Multiplication by z^j; the low coefficients become exactly known zeros.
  Series shifted_up(std::size_t j) const {
    std::vector<R> out(coeffs_.size() + j, R(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + j] = coeffs_[i];
    return Series(std::move(out));
  }

  // Exact division by z^j; requires the first j coefficients to be zero.
  Series shifted_down(std::size_t j) const {
    if (coeffs_.size() < j) {
      throw OrderExceeded("shifted_down past known order");
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (!(coeffs_[i] == R(0))) {
        throw std::domain_error("shifted_down: low coefficient is nonzero");
      }
    }
    return Series(std::vector<R>(coeffs_.begin() + static_cast<long>(j),
                                 coeffs_.end()));
  }

  // Substitution z -> -z.
  Series with_negated_argument() const {
    std::vector<R> out = coeffs_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Series(std::move(out));
  }

  // Formal derivative; one coefficient of knowledge is consumed.
  Series derivative() const {
    if (coeffs_.empty()) return Series();
    std::vector<R> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out.push_back(coeffs_[i] * R(static_cast<long>(i)));
    }
    return Series(std::move(out));
  }

  Series operator-() const {
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return Series(std::move(out));
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Series& a, const Series& b) {
    return !(a == b);
  }

 private:
  std::vector<R> coeffs_;
};

template <typename R>
Series<R> operator+(const Series<R>& a, const Series<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<R> out(n, R(0));
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return Series<R>(std::move(out));
}

template <typename R>
Series<R> operator-(const Series<R>& a, const Series<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<R> out(n, R(0));
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
  return Series<R>(std::move(out));
}

// Truncated convolution. Coefficient t of the product is determined by
// inputs exactly when t < min(order(a), order(b)).
template <typename R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<R> out(n, R(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == R(0)) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return Series<R>(std::move(out));
}

template <typename R>
Series<R> operator*(Series<R> s, const R& scalar) {
  std::vector<R> out = s.coeffs();
  for (auto& c : out) c = c * scalar;
  return Series<R>(std::move(out));
}

template <typename R>
Series<R> pow(const Series<R>& s, unsigned long e) {
  Series<R> acc = Series<R>::constant(R(1), s.order());
  Series<R> base = s;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

// Truncated composition outer(inner). The inner series must have an exactly
// known zero constant term.
template <typename R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner) {
  if (!(inner.at(0) == R(0))) {
    throw NonzeroInnerConstant(
        "series composition requires a zero inner constant term");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  const Series<R> in = inner.truncated(n);
  Series<R> acc = Series<R>::zero(n);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * in + Series<R>::constant(outer[i], n);
  }
  return acc;
}

// Multiplicative inverse of a series with constant term 1; needs ring
// operations only.
template <typename R>
Series<R> inverse_unit(const Series<R>& s) {
  if (!(s.at(0) == R(1))) {
    throw std::domain_error("series inverse requires constant term 1");
  }
  const std::size_t n = s.order();
  std::vector<R> out(n, R(0));
  out[0] = R(1);
  for (std::size_t t = 1; t < n; ++t) {
    R acc = R(0);
    for (std::size_t j = 1; j <= t; ++j) acc += s[j] * out[t - j];
    out[t] = -acc;
  }
  return Series<R>(std::move(out));
}

// 1 / (1 - ratio z) = sum_j ratio^j z^j.
template <typename R>
Series<R> geometric_series(const R& ratio, std::size_t order) {
  std::vector<R> out(order, R(0));
  if (order > 0) out[0] = R(1);
  for (std::size_t j = 1; j < order; ++j) out[j] = out[j - 1] * ratio;
  return Series<R>(std::move(out));
}

// (1 + c z)^alpha = sum_i binom(alpha, i) c^i z^i, truncated.
inline Series<Rational> binomial_series(const Rational& alpha,
                                        const Rational& c, std::size_t order) {
  std::vector<Rational> out(order, Rational(0));
  if (order > 0) out[0] = Rational(1);
  for (std::size_t i = 1; i < order; ++i) {
    // binom(alpha,i) c^i = binom(alpha,i-1) c^{i-1} * (alpha-i+1) c / i
    out[i] = out[i - 1] * (alpha - Rational(static_cast<long>(i) - 1)) * c /
             Rational(static_cast<long>(i));
  }
  return Series<Rational>(std::move(out));
}

// A polynomial is exactly known at every order.
inline Series<Rational> to_series(const PolyQ& p, std::size_t order) {
  std::vector<Rational> out(order, Rational(0));
  for (std::size_t i = 0; i < order && i < p.coeffs().size(); ++i) {
    out[i] = p.coeffs()[i];
  }
  return Series<Rational>(std::move(out));
}

// Embed rational coefficients into a larger ring (constants in PolyQ, ...).
template <typename R>
Series<R> lift(const Series<Rational>& s) {
  std::vector<R> out;
  out.reserve(s.order());
  for (const auto& c : s.coeffs()) out.push_back(R(c));
  return Series<R>(std::move(out));
}

// Exact agreement of the first `count` coefficients; both series must know
// at least that many.
template <typename R>
bool agree_through(const Series<R>& a, const Series<R>& b, std::size_t count) {
  if (a.order() < count || b.order() < count) {
    throw OrderExceeded("agree_through: window exceeds known order");
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

}  // namespace halfpow

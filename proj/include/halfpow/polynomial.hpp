#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfpow/rational.hpp"

namespace halfpow {

// Dense univariate polynomial over Rational in the symbol n. Coefficients
// are stored by ascending power with trailing zeros trimmed; the zero
// polynomial has an empty coefficient sequence and no degree.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(long constant) : PolyQ(Rational(constant)) {}   // NOLINT
  PolyQ(Rational constant) {                            // NOLINT
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  explicit PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static PolyQ monomial(Rational c, std::size_t power);
  static PolyQ variable() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  // Coefficient of n^i; zero beyond the degree.
  const Rational& coeff(std::size_t i) const {
    static const Rational kZero(0);
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }
  Rational leading_coeff() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }

  // Exact Horner evaluation.
  Rational operator()(const Rational& x) const;

  // q with q(n) = p(n + c), as an exact coefficient sequence.
  PolyQ shifted(const Rational& c) const;

  PolyQ pow(unsigned long e) const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ p, const Rational& s);
  friend PolyQ operator*(const Rational& s, PolyQ p) { return std::move(p) * s; }
  friend PolyQ operator/(PolyQ p, const Rational& s);

  friend bool operator==(const PolyQ& a, const PolyQ& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

  std::string to_string(const std::string& var = "n") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace halfpow

#include "halfpow/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace halfpow {

PolyQ PolyQ::monomial(Rational c, std::size_t power) {
  if (c.is_zero()) return PolyQ();
  std::vector<Rational> coeffs(power + 1, Rational(0));
  coeffs[power] = std::move(c);
  return PolyQ(std::move(coeffs));
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

PolyQ PolyQ::shifted(const Rational& c) const {
  // Horner in the shifted variable: p(n + c) built one factor at a time.
  PolyQ base({c, Rational(1)});
  PolyQ acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * base + PolyQ(coeffs_[i]);
  }
  return acc;
}

PolyQ PolyQ::pow(unsigned long e) const {
  PolyQ acc(Rational(1));
  PolyQ base = *this;
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    base = base * base;
    e >>= 1UL;
  }
  return acc;
}

PolyQ PolyQ::operator-() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return PolyQ(std::move(out));
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PolyQ(std::move(out));
}

PolyQ operator*(PolyQ p, const Rational& s) {
  if (s.is_zero()) return PolyQ();
  for (auto& c : p.coeffs_) c *= s;
  return p;
}

PolyQ operator/(PolyQ p, const Rational& s) {
  if (s.is_zero()) throw std::domain_error("PolyQ: division by zero scalar");
  for (auto& c : p.coeffs_) c /= s;
  return p;
}

std::string PolyQ::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (mag == Rational(1));
    if (i == 0 || !unit) out << mag.to_string();
    if (i > 0) {
      if (!unit) out << " ";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace halfpow

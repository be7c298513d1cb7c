#pragma once

#include <stdexcept>
#include <string>

namespace halfpow {

// Requested coefficient lies at or beyond the known truncation order.
// The caller must rebuild the series with a larger order.
class OrderExceeded : public std::out_of_range {
 public:
  explicit OrderExceeded(const std::string& what) : std::out_of_range(what) {}
};

// Substitution into a power series whose inner part has a nonzero
// constant term is ill-formed.
class NonzeroInnerConstant : public std::domain_error {
 public:
  explicit NonzeroInnerConstant(const std::string& what)
      : std::domain_error(what) {}
};

class InvalidK : public std::invalid_argument {
 public:
  explicit InvalidK(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidM : public std::invalid_argument {
 public:
  explicit InvalidM(const std::string& what) : std::invalid_argument(what) {}
};

// Independent computation routes disagreed; internal consistency is broken
// and the result must not be used.
class RouteMismatch : public std::logic_error {
 public:
  explicit RouteMismatch(const std::string& what) : std::logic_error(what) {}
};

// The requested error bound cannot be met with the given precision and
// internal block-size limits.
class ConvergenceParameters : public std::runtime_error {
 public:
  explicit ConvergenceParameters(const std::string& what)
      : std::runtime_error(what) {}
};

class NegativeInput : public std::domain_error {
 public:
  explicit NegativeInput(const std::string& what) : std::domain_error(what) {}
};

}  // namespace halfpow

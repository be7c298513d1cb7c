#include "halfpow/bigfloat.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

namespace halfpow {

BigFloat BigFloat::parse_decimal(const std::string& text, mpfr_prec_t prec) {
  BigFloat out(prec);
  if (mpfr_set_str(out.x_, text.c_str(), 10, MPFR_RNDN) != 0 ||
      !mpfr_number_p(out.x_)) {
    throw std::invalid_argument("cannot parse decimal: " + text);
  }
  return out;
}

std::string BigFloat::to_decimal(std::size_t digits) const {
  if (digits == 0) digits = 1;
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1),
                x_);
  return std::string(buf.data());
}

}  // namespace halfpow

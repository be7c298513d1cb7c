#include "halfpow/tau.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "halfpow/catalan.hpp"
#include "halfpow/errors.hpp"
#include "halfpow/series.hpp"
#include "halfpow/zeta.hpp"

namespace halfpow {

namespace {

long target_bits(const BigFloat& target) {
  return std::max<long>(1, static_cast<long>(-mpfr_get_exp(target.raw())) + 1);
}

// Coefficients of C(z)^m to J terms; cached since the verification grids
// reuse a handful of (m, J) pairs heavily.
std::shared_ptr<const std::vector<Rational>> catalan_power_coeffs(
    long m, std::size_t terms) {
  static std::mutex mutex;
  static std::map<std::pair<long, std::size_t>,
                  std::shared_ptr<const std::vector<Rational>>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{m, terms}];
  if (!slot) {
    slot = std::make_shared<const std::vector<Rational>>(
        pow(catalan_series(terms), static_cast<unsigned long>(m)).coeffs());
  }
  return slot;
}

// Upper bound on the tail truncated after the z^J Catalan coefficient:
//   sum_{x>=X} x^{-m/2-J} x/(x-1)  <=  X/(X-1) (X^{-m/2-J} + X^{1-m/2-J}/(m/2+J-1))
// using |[z^j] C(z)^m| <= 4^j 2^m.
BigFloat truncation_bound(long x0, long m, long j_terms) {
  const Rational x(x0);
  const Rational e1 = -Rational(m, 2) - Rational(j_terms);
  const ApproxReal one = rational_power(x, e1, 96);
  const ApproxReal two = rational_power(x, e1 + Rational(1), 96)
                             .scaled(Rational(1) / (Rational(m, 2) +
                                                    Rational(j_terms) -
                                                    Rational(1)));
  return (one + two).scaled(x / (x - Rational(1))).abs_upper();
}

}  // namespace

ApproxReal tau(const TauRequest& req, mpfr_prec_t prec) {
  if (req.n < 0) throw NegativeInput("tau: n must be nonnegative");
  if (req.m < 3) {
    throw InvalidM("tau: m must be at least 3, got " + std::to_string(req.m));
  }
  if (req.target_abs_err.sign() <= 0) {
    throw std::invalid_argument("tau: target must be positive");
  }

  const long tb = target_bits(req.target_abs_err);
  // tau < 2 always; a result at `prec` bits cannot carry an error bound
  // finer than its own last place.
  if (tb > prec + 2) {
    throw ConvergenceParameters("tau: target below representable precision");
  }
  const mpfr_prec_t wp = std::max<mpfr_prec_t>(prec, tb) + 48;

  // Summands below x0 are taken literally; the design keeps x0 >= 32 so the
  // Catalan rewrite of the tail converges geometrically.
  const long x0 = std::max<long>(64, req.n + 4);
  ApproxReal direct = ApproxReal::exact_long(0, wp);
  const ApproxReal unit = ApproxReal::exact_long(1, wp);
  for (long x = req.n; x < x0; ++x) {
    const ApproxReal root_sum =
        sqrt_rational(Rational(x), wp) + sqrt_rational(Rational(x + 1), wp);
    direct = direct + unit / pow_int(root_sum, static_cast<unsigned long>(req.m));
  }

  BigFloat quarter_target(ApproxReal::kRadiusPrec);
  mpfr_div_ui(quarter_target.raw(), req.target_abs_err.raw(), 4, MPFR_RNDD);

  // Smallest expansion depth whose truncation remainder meets the budget.
  const double log2_x0 = std::log2(static_cast<double>(x0));
  long depth = std::max<long>(
      4, static_cast<long>((static_cast<double>(tb + req.m) + 8.0) / log2_x0));
  BigFloat remainder = truncation_bound(x0, req.m, depth);
  constexpr long kMaxDepth = 4000;
  while (!(remainder <= quarter_target)) {
    depth += 4;
    if (depth > kMaxDepth) {
      throw ConvergenceParameters("tau: truncation depth limit exceeded");
    }
    remainder = truncation_bound(x0, req.m, depth);
  }

  const auto coeffs =
      catalan_power_coeffs(req.m, static_cast<std::size_t>(depth));
  BigFloat zeta_target(ApproxReal::kRadiusPrec);
  mpfr_div_ui(zeta_target.raw(), req.target_abs_err.raw(),
              4 * static_cast<unsigned long>(depth), MPFR_RNDD);

  // tail = 2^{-m} sum_j c_j (-1/4)^j zeta_H(m/2 + j, x0)
  ApproxReal tail = ApproxReal::exact_long(0, wp);
  Rational scale = Rational(1) / Rational(mpz_class(mpz_class(1) << req.m));
  for (long j = 0; j < depth; ++j) {
    const Rational weight = (*coeffs)[static_cast<std::size_t>(j)] * scale;
    if (!weight.is_zero()) {
      const ApproxReal zeta = hurwitz_zeta(Rational(req.m, 2) + Rational(j),
                                           Rational(x0), wp, zeta_target);
      tail = tail + zeta.scaled(weight);
    }
    scale /= Rational(-4);
  }

  ApproxReal result =
      (direct + tail).with_added_error(remainder).rounded_to(prec);
  if (!(result.error() <= req.target_abs_err)) {
    throw ConvergenceParameters("tau: error budget missed at precision " +
                                std::to_string(prec));
  }
  return result;
}

}  // namespace halfpow

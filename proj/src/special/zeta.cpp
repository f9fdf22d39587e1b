#include "mahler/special/zeta.hpp"

#include <stdexcept>
#include <string>

#include "mahler/exact/numbers.hpp"
#include "mahler/special/series.hpp"

namespace mahler::special {

namespace {

// rounding slack for a value computed at p.bits(): a few units in the
// (digits + guard)-th place
Real rounding_slack(const Precision& p) { return ten_pow(-(p.digits + p.guard - 2), 64); }

// sum_{k>=0} (-1)^k / (c k + 1)^s, c = 1 or 2, with the CVZ bound
HighPrecisionReal alternating_power_sum(long s, long c, const Precision& p) {
  const mpfr_prec_t bits = p.bits();
  const long n = cvz_terms(p.digits + p.guard);
  Real value = cvz_alternating([&](long k) { return pow(Real(c * k + 1, bits), -s); }, n, bits);
  // a(k) = (ck+1)^{-s} is a moment sequence with a(0) = 1
  Real err = cvz_error_factor(n, 64) + rounding_slack(p);
  return {std::move(value), std::move(err), true};
}

}  // namespace

HighPrecisionReal zeta(long s, const Precision& p) {
  if (s < 2) throw std::domain_error("zeta(s) requires s >= 2, got " + std::to_string(s));
  if (s % 2 == 1) return zeta_series(s, p);
  const mpfr_prec_t bits = p.bits();
  // zeta(2k) = (-1)^{k-1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
  exact::Rational c = exact::Rational(exact::sign_power(s / 2 - 1)) * exact::bernoulli(s) * exact::pow2(s - 1) /
                      exact::Rational(exact::factorial(s));
  Real value = Real(c, bits) * pow(pi(bits), s);
  return {std::move(value), rounding_slack(p), true};
}

HighPrecisionReal zeta_series(long s, const Precision& p) {
  if (s < 2) throw std::domain_error("zeta(s) requires s >= 2, got " + std::to_string(s));
  HighPrecisionReal eta = alternating_power_sum(s, 1, p);
  const mpfr_prec_t bits = p.bits();
  // zeta = eta / (1 - 2^{1-s}); the factor is at least 1/2
  Real denom = Real(1L, bits) - pow(Real(2L, bits), 1 - s);
  eta.value /= denom;
  eta.error *= 2;
  return eta;
}

HighPrecisionReal dirichlet_L_chi4(long s, const Precision& p) {
  if (s < 1) throw std::domain_error("L(chi_-4, s) requires s >= 1, got " + std::to_string(s));
  if (s % 2 == 0) return dirichlet_L_chi4_series(s, p);
  const mpfr_prec_t bits = p.bits();
  const long k = (s - 1) / 2;
  // L(chi_{-4}, 2k+1) = (-1)^k E_{2k} (pi/2)^{2k+1} / (2 (2k)!)
  exact::Rational c = exact::Rational(exact::sign_power(k) * exact::euler_number(2 * k)) /
                      exact::Rational(2 * exact::factorial(2 * k));
  Real value = Real(c, bits) * pow(pi(bits) / 2, s);
  return {std::move(value), rounding_slack(p), true};
}

HighPrecisionReal dirichlet_L_chi4_series(long s, const Precision& p) {
  if (s < 1) throw std::domain_error("L(chi_-4, s) requires s >= 1, got " + std::to_string(s));
  return alternating_power_sum(s, 2, p);
}

HighPrecisionComplex li_single(long k, UnitPoint point, const Precision& p) {
  if (k < 1) throw std::domain_error("Li_k requires k >= 1");
  const mpfr_prec_t bits = p.bits();
  if (point == UnitPoint::one) {
    if (k == 1) throw std::domain_error("Li_1(1) diverges");
    HighPrecisionReal z = zeta(k, p);
    return {Complex(std::move(z.value), Real(0L, bits)), std::move(z.error), z.rigorous};
  }
  // Li_k(-1) = -eta(k)
  Real at_minus_one(bits);
  Real err(64);
  if (k == 1) {
    at_minus_one = -log2_const(bits);
    err = rounding_slack(p);
  } else {
    HighPrecisionReal eta = alternating_power_sum(k, 1, p);
    at_minus_one = -eta.value;
    err = eta.error;
  }
  if (point == UnitPoint::minus_one) return {Complex(std::move(at_minus_one), Real(0L, bits)), err, true};
  // even powers of +-i give sum (-1)^m / (2m)^k = 2^{-k} Li_k(-1)
  Real re = at_minus_one * pow(Real(2L, bits), -k);
  HighPrecisionReal l = dirichlet_L_chi4(k, p);
  Real im = point == UnitPoint::i ? l.value : -l.value;
  return {Complex(std::move(re), std::move(im)), err + l.error, true};
}

HighPrecisionComplex script_L_single(long r, UnitPoint alpha, const Precision& p) {
  if (r == 1 && is_real(alpha)) throw std::domain_error("script-L_1(+-1) diverges");
  HighPrecisionComplex a = li_single(r, alpha, p);
  HighPrecisionComplex b = li_single(r, -alpha, p);
  return {a.value - b.value, a.error + b.error, a.rigorous && b.rigorous};
}

}  // namespace mahler::special

#include "mahler/special/polylog.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "mahler/special/series.hpp"
#include "mahler/special/zeta.hpp"

namespace mahler::special {

namespace {

std::string describe(long r, long s, UnitPoint x1, UnitPoint x2) {
  return "Li_{" + std::to_string(r) + "," + std::to_string(s) + "}(" + to_string(x1) + "," + to_string(x2) + ")";
}

// Richardson order and first block index for a target of D digits. The
// extrapolation amplifies rounding by about 10^{2D}, hence the guard.
struct BlockPlan {
  long order;
  long first_block;
  long guard_digits;
};

BlockPlan plan_for(long digits) {
  return {digits, 8 * digits, 2 * digits + 20};
}

// sum_{k>=1} x2^k (Li_r(x1) - H_{k-1}) / k^s, extrapolated over blocks of 4.
HighPrecisionComplex tail_sum(long r, long s, UnitPoint x1, UnitPoint x2, const Complex& li_r, long digits,
                              mpfr_prec_t bits) {
  const BlockPlan plan = plan_for(digits);
  const long last_block = plan.first_block + plan.order;
  std::vector<Real> re_sums, im_sums;
  re_sums.reserve(static_cast<size_t>(plan.order) + 1);
  im_sums.reserve(static_cast<size_t>(plan.order) + 1);

  Complex h(bits);       // H_{k-1}
  Complex total(bits);   // running partial sum
  for (long k = 1; k <= 4 * last_block; ++k) {
    const Real inv_ks = pow(Real(k, bits), -s);
    Complex term = rotate(li_r - h, power(x2, k)) * inv_ks;
    total += term;
    h += rotate(Complex(pow(Real(k, bits), -r), Real(0L, bits)), power(x1, k));
    if (k % 4 == 0 && k / 4 >= plan.first_block) {
      re_sums.push_back(total.re);
      im_sums.push_back(total.im);
    }
  }
  Complex best(richardson(re_sums, plan.first_block), richardson(im_sums, plan.first_block));
  // lower-order extrapolant from the same data, for the error estimate
  std::vector<Real> re_low(re_sums.begin(), re_sums.end() - 2), im_low(im_sums.begin(), im_sums.end() - 2);
  Complex low(richardson(re_low, plan.first_block), richardson(im_low, plan.first_block));
  Real err = abs(best - low) + ten_pow(-digits, 64);
  return {std::move(best), std::move(err), false};
}

// sum_{j>=0} (-1)^j f(j) with a same-data lower-order comparison
HighPrecisionReal cvz_with_estimate(const std::function<Real(long)>& f, long digits, mpfr_prec_t bits) {
  const long n = cvz_terms(digits);
  Real hi = cvz_alternating(f, n, bits);
  Real lo = cvz_alternating(f, n - n / 5, bits);
  Real err = abs(hi - lo) + ten_pow(-digits, 64);
  return {std::move(hi), std::move(err), false};
}

// Li_{1,s}(1, x2) = sum_{k>=2} x2^k H_{k-1} / k^s with H the harmonic numbers.
HighPrecisionComplex harmonic_case(long s, UnitPoint x2, long digits, mpfr_prec_t bits) {
  const long n = cvz_terms(digits);
  std::vector<Real> harmonic(static_cast<size_t>(2 * n + 3), Real(0L, bits));  // harmonic[j] = H_j
  for (size_t j = 1; j < harmonic.size(); ++j) harmonic[j] = harmonic[j - 1] + Real(1L, bits) / static_cast<long>(j);
  auto kth = [&](long k) { return harmonic[static_cast<size_t>(k - 1)] * pow(Real(k, bits), -s); };

  if (x2 == UnitPoint::minus_one) {
    // sum_{k>=1} (-1)^k a(k) = -sum_{j>=0} (-1)^j a(j+1)
    HighPrecisionReal v = cvz_with_estimate([&](long j) { return kth(j + 1); }, digits, bits);
    return {Complex(-v.value, Real(0L, bits)), v.error, false};
  }
  // x2 = +-i: even k = 2t+2 carry (-1)^{t+1}, odd k = 2t+1 carry x2 (-1)^t
  HighPrecisionReal even = cvz_with_estimate([&](long t) { return kth(2 * t + 2); }, digits, bits);
  HighPrecisionReal odd = cvz_with_estimate([&](long t) { return kth(2 * t + 1); }, digits, bits);
  Complex value = Complex(-even.value, Real(0L, bits)) + rotate(Complex(odd.value, Real(0L, bits)), x2);
  return {std::move(value), even.error + odd.error, false};
}

}  // namespace

HighPrecisionComplex multiple_polylog(long r, long s, UnitPoint x1, UnitPoint x2, const Precision& p) {
  if (r < 1 || s < 1) throw std::domain_error(describe(r, s, x1, x2) + ": indices must be positive");
  if (s == 1 && x2 == UnitPoint::one) throw std::domain_error(describe(r, s, x1, x2) + " diverges");
  const long digits = p.digits + p.guard;

  if (r == 1 && x1 == UnitPoint::one) {
    if (x2 == UnitPoint::one)
      throw std::domain_error(describe(r, s, x1, x2) + " is not supported by the series engine");
    const mpfr_prec_t bits = p.with_guard(10).bits();
    return harmonic_case(s, x2, digits, bits);
  }

  const Precision hp = p.with_guard(plan_for(digits).guard_digits);
  const mpfr_prec_t bits = hp.bits();
  HighPrecisionComplex li_r = li_single(r, x1, hp);
  HighPrecisionComplex li_s = li_single(s, x2, hp);
  HighPrecisionComplex tail = tail_sum(r, s, x1, x2, li_r.value, digits, bits);
  Complex value = li_r.value * li_s.value - tail.value;
  Real err = tail.error + li_r.error * abs(li_s.value) + li_s.error * abs(li_r.value);
  return {std::move(value), std::move(err), false};
}

HighPrecisionComplex script_L_double(long r, long s, UnitPoint alpha, const Precision& p) {
  const UnitPoint m = -alpha;
  HighPrecisionComplex a = multiple_polylog(r, s, alpha, alpha, p);
  HighPrecisionComplex b = multiple_polylog(r, s, m, alpha, p);
  HighPrecisionComplex c = multiple_polylog(r, s, alpha, m, p);
  HighPrecisionComplex d = multiple_polylog(r, s, m, m, p);
  Complex v = a.value - b.value + c.value - d.value;
  v *= Real(2L, v.re.bits());
  Real err = (a.error + b.error + c.error + d.error) * 2;
  return {std::move(v), std::move(err), false};
}

HighPrecisionComplex i_script_L3_ii(long b, const Precision& p) {
  HighPrecisionComplex v = script_L_double(3, b, UnitPoint::i, p);
  return {rotate(v.value, UnitPoint::i), std::move(v.error), false};
}

}  // namespace mahler::special

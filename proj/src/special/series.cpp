#include "mahler/special/series.hpp"

#include <cmath>
#include <stdexcept>

namespace mahler::special {

long cvz_terms(long digits) { return static_cast<long>(std::ceil(1.31 * static_cast<double>(digits))) + 10; }

Real cvz_alternating(const std::function<Real(long)>& a, long n, mpfr_prec_t bits) {
  if (n < 1) throw std::invalid_argument("need at least one term");
  // d = ((3 + sqrt 8)^n + (3 + sqrt 8)^{-n}) / 2
  Real base = Real(3L, bits) + sqrt(Real(8L, bits));
  Real d = pow(base, n);
  d = (d + Real(1L, bits) / d) / 2;
  Real b(-1L, bits);
  Real c = -d;
  Real s(0L, bits);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    // b <- b (k+n)(k-n) / ((k+1/2)(k+1))
    b *= (k + n) * (k - n) * 2;
    b /= (2 * k + 1) * (k + 1);
  }
  return s / d;
}

Real cvz_error_factor(long n, mpfr_prec_t bits) {
  Real base = Real(3L, bits) + sqrt(Real(8L, bits));
  return Real(2L, bits) / pow(base, n);
}

Real richardson(const std::vector<Real>& partial_sums, long first_index) {
  if (partial_sums.empty()) throw std::invalid_argument("no partial sums");
  const long m = static_cast<long>(partial_sums.size()) - 1;
  const mpfr_prec_t bits = partial_sums.front().bits();
  // sum_k S(M0+k) (M0+k)^m (-1)^{k+m} / (k! (m-k)!)
  Real out(0L, bits);
  Real inv_fact_k(1L, bits);  // 1/k!
  Real inv_fact_mk(1L, bits);
  for (long j = 2; j <= m; ++j) inv_fact_mk /= j;  // 1/m!
  for (long k = 0; k <= m; ++k) {
    Real w = pow(Real(first_index + k, bits), m) * inv_fact_k * inv_fact_mk;
    if ((k + m) % 2) w = -w;
    out += partial_sums[static_cast<size_t>(k)] * w;
    inv_fact_k /= k + 1;
    inv_fact_mk *= m - k;
  }
  return out;
}

}  // namespace mahler::special

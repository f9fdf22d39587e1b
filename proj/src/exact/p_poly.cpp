#include "mahler/exact/p_poly.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "mahler/exact/numbers.hpp"

namespace mahler::exact {

PolyQ p_poly_recursive(long k) {
  if (k < 0) throw std::domain_error("p_poly_recursive: negative index");
  static std::mutex mutex;
  static std::vector<PolyQ> cache;
  std::lock_guard lock(mutex);
  for (long m = static_cast<long>(cache.size()); m <= k; ++m) {
    const Rational inv = make_rational(1, m + 1);
    PolyQ p = PolyQ::monomial(inv, static_cast<int>(m + 1));
    for (long j = 3; j <= m + 1; j += 2) {
      Rational c = inv * Rational(binomial(m + 1, j)) * sign_power((j + 1) / 2);
      p += cache[static_cast<size_t>(m + 1 - j)] * c;
    }
    cache.push_back(std::move(p));
  }
  return cache[static_cast<size_t>(k)];
}

PolyQ p_poly_closed(long k) {
  if (k < 0) throw std::domain_error("p_poly_closed: negative index");
  std::vector<Rational> coeffs(static_cast<size_t>(k) + 2);
  const Rational lead = make_rational(-2, k + 1);
  for (long h = 0; h <= k; h += 2) {
    Rational c = lead * bernoulli(h) * Rational(binomial(k + 1, h)) * (pow2(h - 1) - 1);
    coeffs[static_cast<size_t>(k + 1 - h)] = c * sign_power(h / 2);
  }
  return PolyQ(std::move(coeffs));
}

Rational p_poly_special_value(long l) {
  if (l < 1) throw std::domain_error("p_poly_special_value: l must be >= 1");
  return Rational(sign_power(l)) * (pow2(2 * l) - 1) * bernoulli(2 * l) / l;
}

}  // namespace mahler::exact

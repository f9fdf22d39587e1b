#include "mahler/formulas/coefficients.hpp"

#include <stdexcept>

#include "mahler/exact/p_poly.hpp"
#include "mahler/exact/symmetric.hpp"

namespace mahler::formulas {

using exact::even_lattice_symmetric;
using exact::factorial;
using exact::odd_lattice_symmetric;

Rational coeff_a(long n, long h) {
  if (n < 1 || h < 0 || h > n - 1) throw std::out_of_range("coeff_a needs n >= 1 and 0 <= h <= n-1");
  return even_lattice_symmetric(n - 1, n - 1 - h) / Rational(factorial(2 * n - 1));
}

Rational coeff_b(long n, long h) {
  if (n < 0 || h < 0 || h > n) throw std::out_of_range("coeff_b needs n >= 0 and 0 <= h <= n");
  return odd_lattice_symmetric(n, n - h) / Rational(factorial(2 * n));
}

PolyQ coeff_a_polynomial(long n) {
  PolyQ out;
  for (long h = 0; h < n; ++h) out += PolyQ::monomial(coeff_a(n, h), static_cast<int>(2 * h));
  return out;
}

PolyQ coeff_b_polynomial(long n) {
  PolyQ out;
  for (long h = 0; h <= n; ++h) out += PolyQ::monomial(coeff_b(n, h), static_cast<int>(2 * h));
  return out;
}

bool coefficient_products_agree(long n) {
  if (n < 1) throw std::out_of_range("coefficient_products_agree needs n >= 1");
  const PolyQ x2 = PolyQ::monomial(1, 2);
  PolyQ even = PolyQ::constant(Rational(1) / Rational(factorial(2 * n - 1)));
  for (long j = 1; j <= n - 1; ++j) even = even * (x2 + PolyQ::constant((2 * j) * (2 * j)));
  PolyQ odd = PolyQ::constant(Rational(1) / Rational(factorial(2 * n)));
  for (long j = 1; j <= n; ++j) odd = odd * (x2 + PolyQ::constant((2 * j - 1) * (2 * j - 1)));
  return even == coeff_a_polynomial(n) && odd == coeff_b_polynomial(n);
}

namespace {

// P_{2h-1}(x) - P_{2h-1}(i); the value at i is real
PolyQ shifted_odd_p(long h) {
  PolyQ p = exact::p_poly_recursive(2 * h - 1);
  p -= PolyQ::constant(exact::p_poly_special_value(h));
  return p;
}

PolyQ scaled(PolyQ p, const Rational& c) {
  p *= c;
  return p;
}

}  // namespace

bool coefficient_transfer_identity(long n, TransferDirection direction) {
  if (direction == TransferDirection::ab) {
    if (n < 1) throw std::out_of_range("transfer identity ab needs n >= 1");
    PolyQ rhs;
    for (long h = 1; h <= n; ++h) rhs += scaled(shifted_odd_p(h), coeff_a(n, h - 1));
    return coeff_b_polynomial(n) == rhs;
  }
  if (n < 0) throw std::out_of_range("transfer identity ba needs n >= 0");
  PolyQ lhs, rhs;
  for (long h = 1; h <= n + 1; ++h) lhs += PolyQ::monomial(coeff_a(n + 1, h - 1), static_cast<int>(2 * h - 1));
  for (long h = 0; h <= n; ++h) rhs += scaled(exact::p_poly_recursive(2 * h), coeff_b(n, h));
  return lhs == rhs;
}

bool induction_step_identity(long n, TransferDirection direction) {
  PolyQ lhs, rhs;
  if (direction == TransferDirection::ab) {
    if (n < 1) throw std::out_of_range("induction step ab needs n >= 1");
    for (long h = 0; h <= n; ++h) lhs += PolyQ::monomial(odd_lattice_symmetric(n, n - h), static_cast<int>(2 * h));
    for (long h = 1; h <= n; ++h) rhs += scaled(shifted_odd_p(h), 2 * n * even_lattice_symmetric(n - 1, n - h));
  } else {
    if (n < 0) throw std::out_of_range("induction step ba needs n >= 0");
    for (long h = 0; h <= n; ++h)
      lhs += PolyQ::monomial(even_lattice_symmetric(n, n - h), static_cast<int>(2 * h + 1));
    for (long h = 0; h <= n; ++h)
      rhs += scaled(exact::p_poly_recursive(2 * h), (2 * n + 1) * odd_lattice_symmetric(n, n - h));
  }
  return lhs == rhs;
}

}  // namespace mahler::formulas

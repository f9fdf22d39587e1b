#pragma once

#include "mahler/exact/polynomial.hpp"

namespace mahler::exact {

// The log-kernel polynomials P_k, with
//   int_0^inf x log^k x dx / ((x^2+a^2)(x^2+b^2))
//     = (pi/2)^{k+1} (P_k(2 log a / pi) - P_k(2 log b / pi)) / (a^2 - b^2).
//
// Built from the defining recursion
//   P_k(x) = x^{k+1}/(k+1) + 1/(k+1) sum_{odd j>1}^{k+1} (-1)^{(j+1)/2} C(k+1,j) P_{k+1-j}(x).
// Memoized.
PolyQ p_poly_recursive(long k);

// Bernoulli closed form
//   P_k(x) = -2/(k+1) sum_{h=0}^{k} B_h C(k+1,h) (2^{h-1}-1) i^h x^{k+1-h}.
// Only even h survive: h = 1 carries the factor 2^0 - 1 = 0 and the odd h > 1
// carry B_h = 0, so i^h = (-1)^{h/2} and every coefficient is rational.
PolyQ p_poly_closed(long k);

// P_{2l-1}(i) = (-1)^l (2^{2l} - 1) B_{2l} / l, for l >= 1.
Rational p_poly_special_value(long l);

}  // namespace mahler::exact

#pragma once

#include "mahler/exact/polynomial.hpp"
#include "mahler/exact/rational.hpp"

namespace mahler::formulas {

using exact::PolyQ;
using exact::Rational;

// a_{n,h} = s_{n-1-h}(2^2, ..., (2n-2)^2) / (2n-1)!,  n >= 1, 0 <= h <= n-1.
// Weights of the log^{2h+1} moments against dx/(x^2-1) after 2n transforms.
Rational coeff_a(long n, long h);

// b_{n,h} = s_{n-h}(1^2, ..., (2n-1)^2) / (2n)!,  n >= 0, 0 <= h <= n.
// Weights of the log^{2h} moments against dx/(x^2+1) after 2n+1 transforms.
Rational coeff_b(long n, long h);

// sum_h a_{n,h} x^{2h} and sum_h b_{n,h} x^{2h}
PolyQ coeff_a_polynomial(long n);
PolyQ coeff_b_polynomial(long n);

// The generating products the coefficients come from:
//   (x^2+2^2)...(x^2+(2n-2)^2) / (2n-1)!   and   (x^2+1^2)...(x^2+(2n-1)^2) / (2n)!
bool coefficient_products_agree(long n);

enum class TransferDirection {
  // sum_{h=0}^{n} b_{n,h} x^{2h} = sum_{h=1}^{n} a_{n,h-1} (P_{2h-1}(x) - P_{2h-1}(i)),  n >= 1
  ab,
  // sum_{h=1}^{n+1} a_{n+1,h-1} x^{2h-1} = sum_{h=0}^{n} b_{n,h} P_{2h}(x),  n >= 0
  ba,
};

// Both identities checked as exact polynomial equalities.
bool coefficient_transfer_identity(long n, TransferDirection direction);

// The same statements with denominators cleared, in the lattice form used to
// pass from one parity to the next:
//   ab: sum_{h=0}^{n} s_{n-h}(odd(n)) x^{2h} = 2n sum_{h=1}^{n} s_{n-h}(even(n-1)) (P_{2h-1}(x) - P_{2h-1}(i))
//   ba: sum_{h=0}^{n} s_{n-h}(even(n)) x^{2h+1} = (2n+1) sum_{h=0}^{n} s_{n-h}(odd(n)) P_{2h}(x)
bool induction_step_identity(long n, TransferDirection direction);

}  // namespace mahler::formulas

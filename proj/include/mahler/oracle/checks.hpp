#pragma once

#include "mahler/oracle/quadrature.hpp"

namespace mahler::oracle {

struct QuadratureCheck {
  double quadrature = 0;
  double formula = 0;
  double error_estimate = 0;
  double tolerance = 0;
  bool agree = false;
};

// int_0^inf x log^k x dx / ((x^2+a^2)(x^2+b^2))
//   = (pi/2)^{k+1} (P_k(2 log a / pi) - P_k(2 log b / pi)) / (a^2 - b^2)
// a, b > 0, a != b, 0 <= k <= 10; absolute tolerance 1e-9.
QuadratureCheck kernel_integral_check(double a, double b, int k);

// int_0^inf x^alpha dx / ((x^2+a^2)(x^2+b^2))
//   = pi (a^{alpha-1} - b^{alpha-1}) / (2 cos(pi alpha / 2) (b^2 - a^2)),  0 < alpha < 1, a != b.
QuadratureCheck power_kernel_check(double a, double b, double alpha);

enum class DenominatorSign { minus, plus };

// minus: int_0^1 log^j x dx/(x^2-1) = (-1)^{j+1} j! (1 - 2^{-(j+1)}) zeta(j+1),  1 <= j <= 8
// plus:  int_0^1 log^j x dx/(x^2+1) = (-1)^j j! L(chi_{-4}, j+1),             0 <= j <= 8
// The closed side comes from the multiprecision special values; tolerance 1e-10.
QuadratureCheck length_one_integral_check(int j, DenominatorSign sign);

enum class IntegralIdentity {
  log_one_plus_x,       // int_0^1 log(1+x) log^{2h-1} x dx/(x^2-1), h >= 1
  log_one_plus_x2,      // int_0^inf log(1+x^2) log^{2h} x dx/(x^2+1), h >= 0
  inverse_tangent,      // int_0^inf Im Li_2(ix) log^{2h} x dx/(x^2+1), h >= 0
};

// Quadrature of the defining integral against the exact combination from
// special-values. Absolute tolerance 1e-8, although the values reach ~1e4 at h = 3.
QuadratureCheck integral_identity_check(IntegralIdentity which, long h);

}  // namespace mahler::oracle

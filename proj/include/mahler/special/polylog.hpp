#pragma once

#include "mahler/special/real.hpp"
#include "mahler/special/unit_point.hpp"

namespace mahler::special {

// Li_{r,s}(x1, x2) = sum_{0<k1<k2} x1^k1 x2^k2 / (k1^r k2^s) at fourth roots of unity.
//
// Written as Li_r(x1) Li_s(x2) - sum_k x2^k (Li_r(x1) - H_{k-1}) / k^s with
// H_n = sum_{j<=n} x1^j / j^r, the summand is a period-4 phase times a smooth
// function of k, so partial sums taken at multiples of 4 are Richardson
// extrapolated in 1/k. When r = 1 and x1 = 1 the inner sums grow like log k and
// the alternating subsequences are accelerated instead. The error is the spread
// between extrapolants of different order: heuristic, rigorous = false.
//
// Throws std::domain_error for s = 1, x2 = 1 (divergent), r < 1 or s < 1, and for
// r = 1, x1 = x2 = 1, which converges but has no supported acceleration.
HighPrecisionComplex multiple_polylog(long r, long s, UnitPoint x1, UnitPoint x2, const Precision& p);

// script-L_{r,s}(alpha, alpha)
//   = 2 (Li_{r,s}(alpha, alpha) - Li_{r,s}(-alpha, alpha) + Li_{r,s}(alpha, -alpha) - Li_{r,s}(-alpha, -alpha)).
HighPrecisionComplex script_L_double(long r, long s, UnitPoint alpha, const Precision& p);

// i * script-L_{3,b}(i, i). Real up to numerical noise; the imaginary part is
// returned as is so callers can check it.
HighPrecisionComplex i_script_L3_ii(long b, const Precision& p);

}  // namespace mahler::special

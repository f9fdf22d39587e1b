#pragma once

#include "mahler/special/real.hpp"
#include "mahler/special/unit_point.hpp"

namespace mahler::special {

// zeta(s), s >= 2. Even s from the Bernoulli formula, odd s from the
// accelerated alternating series for the eta function. Throws
// std::domain_error for s < 2.
HighPrecisionReal zeta(long s, const Precision& p);
// Always the alternating-series path; used to cross-check the even case.
HighPrecisionReal zeta_series(long s, const Precision& p);

// L(chi_{-4}, s), s >= 1. Odd s from the Euler-number formula, even s from the
// accelerated series sum (-1)^k / (2k+1)^s. Throws std::domain_error for s < 1.
HighPrecisionReal dirichlet_L_chi4(long s, const Precision& p);
HighPrecisionReal dirichlet_L_chi4_series(long s, const Precision& p);

// Li_k at a fourth root of unity. Li_k(1) = zeta(k); Li_k(-1) = -(1 - 2^{1-k}) zeta(k);
// Li_k(+-i) = 2^{-k} Li_k(-1) +- i L(chi_{-4}, k). Li_1(1) diverges and throws
// std::domain_error.
HighPrecisionComplex li_single(long k, UnitPoint point, const Precision& p);

// script-L_r(alpha) = Li_r(alpha) - Li_r(-alpha).
HighPrecisionComplex script_L_single(long r, UnitPoint alpha, const Precision& p);

}  // namespace mahler::special

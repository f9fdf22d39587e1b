#pragma once

#include <functional>
#include <vector>

#include "mahler/special/real.hpp"

namespace mahler::special {

// Terms needed by the alternating-series accelerator for `digits` digits:
// its error shrinks like (3 + sqrt 8)^{-n}.
long cvz_terms(long digits);

// sum_{k>=0} (-1)^k a(k) by the Cohen-Villegas-Zagier weighted partial sums.
// For a(k) = int t^k dmu(t) with mu positive on [0,1] the error is at most
// 2 a(0) / (3 + sqrt 8)^n; for other smooth a(k) it is an estimate only.
Real cvz_alternating(const std::function<Real(long)>& a, long n, mpfr_prec_t bits);

// 2 / (3 + sqrt 8)^n, the factor in the error bound above.
Real cvz_error_factor(long n, mpfr_prec_t bits);

// Richardson extrapolation to M -> infinity of S(M0), S(M0+1), ..., S(M0+m),
// assuming S(M) = S + c_1/M + c_2/M^2 + ...; uses all m+1 values.
Real richardson(const std::vector<Real>& partial_sums, long first_index);

}  // namespace mahler::special

#pragma once

#include <complex>

namespace mahler::oracle {

// Double-precision polylog helpers for the base measures.

// Li_2(z) on the whole plane (principal branch): inversion for |z| > 1,
// reflection for Re z > 1/2, then the Bernoulli series in -log(1-z).
std::complex<double> dilog(std::complex<double> z);

// Im Li_2(i x), the inverse tangent integral.
double inverse_tangent_integral(double x);

// Li_3(x) for 0 <= x <= 1: power series below 1/2, expansion in log x above.
double trilog(double x);

// script-L_3(t) = Li_3(t) - Li_3(-t) = 2 Li_3(t) - Li_3(t^2)/4 for 0 <= t <= 1.
double script_L3(double t);

}  // namespace mahler::oracle

#pragma once

namespace mahler::oracle {

enum class ArgumentMode { real, imaginary };

// m(1 + alpha z) = log^+ |alpha|
double base_measure_I(double alpha_abs);

// pi^2 m((1+x) + alpha (1+y) z): 2 L_3(|alpha|) for |alpha| <= 1,
// pi^2 log|alpha| + 2 L_3(1/|alpha|) above.
double base_measure_II(double alpha_abs);

// real mode: m(1 + alpha x + (1-alpha) y), equal to log^+ alpha for alpha > 0
// and log(1 - alpha) for alpha < 0.
// imaginary mode: pi m(1 + i alpha x + (1 - i alpha) y)
//   = pi/4 log(alpha^2 + 1) + Im Li_2(i |alpha|).
double base_measure_III(double alpha, ArgumentMode mode);

}  // namespace mahler::oracle

#pragma once

#include "mahler/exact/rational.hpp"

namespace mahler::exact {

// Bernoulli numbers from x/(e^x - 1), so B_1 = -1/2. Memoized; safe to call
// from several threads.
Rational bernoulli(long n);

// Euler numbers from 2e^x/(e^{2x} + 1) = sech x: E_0 = 1, E_2 = -1, E_4 = 5,
// odd indices vanish. Memoized; safe to call from several threads.
BigInt euler_number(long n);

}  // namespace mahler::exact

#pragma once

#include "mahler/formulas/families.hpp"
#include "mahler/oracle/quadrature.hpp"

namespace mahler::oracle {

// Mahler measure m(P) of a family member through its one-dimensional form
//   pi^N m = C sum_h w_h int_0^inf F(x) log^j x dx / (x^2 -+ 1)
// where F is the base measure of the specialized polynomial and the weights
// come from coeff_a (even transform count) or coeff_b (odd count).
// n_transforms <= 6. `digits` sets the quadrature tolerance, capped by double
// precision. Family II with no transforms is the base measure at alpha = 1.
IntegralEstimate reduced_integral(const formulas::FamilySpec& spec, int digits = 13);

}  // namespace mahler::oracle

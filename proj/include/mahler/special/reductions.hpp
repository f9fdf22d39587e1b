#pragma once

#include "mahler/special/combination.hpp"
#include "mahler/special/constant_store.hpp"
#include "mahler/special/real.hpp"
#include "mahler/special/unit_point.hpp"

namespace mahler::special {

// Li_m(+-1) in the constant basis: zeta(m), -(1 - 2^{1-m}) zeta(m), and
// Li_1(-1) = -log 2. Li_1(1) diverges and throws std::domain_error unless
// `regularize` is set, in which case it is taken to be 0.
ZetaCombination li_at_sign(long m, UnitPoint sign, bool regularize = false);

// Exact reduction of Li_{r,s}(rho, sigma), rho, sigma = +-1, r + s odd, to
// products of single zeta values (Borwein-Bradley-Broadhurst). Products of an
// even and an odd zeta value fold into pi^a zeta(odd); an odd-odd product
// throws std::logic_error.
//
// r >= 2 is the proven range. With `regularize_li1` the formula is also applied
// at r = 1 with Li_1(1) := 0; the cases where that gives the right value are
// established numerically by the test suite.
//
// Throws std::domain_error when r + s is even, when s = 1 and sigma = 1, and
// when r = 1 without `regularize_li1`.
ZetaCombination bbb_reduce(long r, long s, UnitPoint rho, UnitPoint sigma, bool regularize_li1 = false);

// script-L_{r,s}(1,1) assembled from four reductions.
ZetaCombination script_L_double_reduced(long r, long s);

// Closed form for script-L_{3,2h}(1,1), h >= 1:
//   (2^{2h+3}-1)/2^{2h+1} (h+1)(2h+1) zeta(2h+3) - (2^{2h+1}-1)/2^{2h} h(2h+5) zeta(2) zeta(2h+1)
//   - sum_{k=2}^{h-1} C(2h-2k+2, 2) (2^{2h-2k+3}-1)/2^{2h} zeta(2k) zeta(2h-2k+3),
// with h = 1 given separately as 93/4 zeta(5) - 21/2 zeta(2) zeta(3).
ZetaCombination script_L32h_closed_form(long h);

enum class LogOnePlusXForm {
  // Li_{1,2h}(-1,1) - Li_{1,2h}(1,-1), zeta(even) written as zeta values
  li_difference,
  // int_0^1 log(1+x) log^{2h-1} x dx / (x^2 - 1), written with Bernoulli numbers and pi
  integral,
};

// Both forms of the log(1+x) moment combination, h >= 1. They are related by
// integral = -(2h-1)!/2 * li_difference.
ZetaCombination log_one_plus_x_combination(long h, LogOnePlusXForm form);

// int_0^inf log(1+x^2) log^{2h} x dx / (x^2+1), h >= 0, in terms of Euler numbers:
//   (-1)^h 2 E_{2h} (pi/2)^{2h+1} log 2
//   + 2 sum_{l=1}^{h} (2h)!/(2h-2l)! (1 - 2^{-2l-1}) (-1)^{h-l} E_{2h-2l} (pi/2)^{2h-2l+1} zeta(2l+1).
ZetaCombination log_one_plus_x2_integral(long h);

// int_0^inf Im Li_2(ix) log^{2h} x dx / (x^2+1), h >= 0:
//   sum_{l=0}^{h} B_{2l} (2h)!/(2l)! (2^{2l-1}-1) (-1)^{l+1} pi^{2l} (h-l+1) (2^{2h+3-2l}-1)/2^{2h+1} zeta(2h+3-2l).
ZetaCombination inverse_tangent_integral(long h);

// Numerical value of a combination. L3b_ii elements come from the multiple
// polylog series (heuristic error); everything else is rigorous. Constants are
// read from and written to `store` when one is given.
HighPrecisionReal combination_value(const ZetaCombination& c, const Precision& p, ConstantStore* store = nullptr);

}  // namespace mahler::special

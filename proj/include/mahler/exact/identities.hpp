#pragma once

// Exact checks of the combinatorial identities tying Bernoulli and Euler
// numbers to elementary symmetric functions of the square lattices
//   odd(n)  = 1^2, 3^2, ..., (2n-1)^2
//   even(m) = 2^2, 4^2, ..., (2m)^2.
// Every check evaluates both sides over Q and compares; out-of-range indices
// throw std::out_of_range.

#include "mahler/exact/rational.hpp"

namespace mahler::exact {

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

enum class LatticeExchange {
  // 2n (-1)^l s_{n-l}(even(n-1)) = sum_{h=l}^{n} (-1)^h C(2h, 2l-1) s_{n-h}(odd(n)),  1 <= l <= n
  even_from_odd,
  // (2n+1) (-1)^l s_{n-l}(odd(n)) = sum_{h=l}^{n} (-1)^h C(2h+1, 2l) s_{n-h}(even(n)),  0 <= l <= n
  odd_from_even,
};

IdentitySides lattice_exchange_sides(long n, long l, LatticeExchange variant);
bool lattice_exchange_identity(long n, long l, LatticeExchange variant);

enum class BernoulliLattice {
  // s_{n-l}(odd(n)) = n sum_s s_{n-l-s}(even(n-1)) B_{2s} C(2(l+s),2s) (2^{2s}-2) (-1)^{s+1} / (l+s),  1 <= l <= n
  odd_coefficients,
  // ((2n)! / (2^n n!))^2 = 2n sum_{s=1}^{n} s_{n-s}(even(n-1)) B_{2s} (2^{2s}-1) (-1)^{s+1} / s,  n >= 1, l unused
  constant_term,
  // (2l+1) s_{n-l}(even(n)) = (2n+1) sum_s s_{n-l-s}(odd(n)) B_{2s} C(2(l+s),2s) (2^{2s}-2) (-1)^{s+1},  0 <= l <= n
  even_coefficients,
};

IdentitySides bernoulli_lattice_sides(long n, long l, BernoulliLattice variant);
bool bernoulli_lattice_identity(long n, long l, BernoulliLattice variant);

// n sum_s s_{n-l-s}(even(n-1)) B_{2s} C(2(l+s),2s) 2^{2s}(2^{2s}-2)(-1)^{s+1} / (l+s)
//   = sum_{k=l}^{n} (-1)^{k+l} C(2k,2l) s_{n-k}(odd(n)) E_{2(k-l)},   1 <= l <= n.
// l = 0 is rejected: the s = 0 term divides by l + s = 0.
IdentitySides bernoulli_euler_sides(long n, long l);
bool bernoulli_euler_identity(long n, long l);

enum class EulerFactorial {
  // sum_{h=0}^{n} s_{n-h}(odd(n)) (-1)^h E_{2h} = (2n)!,  n >= 0
  euler_even,
  // sum_{h=0}^{n} s_{n-h}(odd(n)) (-1)^{h+1} E_{2h+2} = (2n+1)!,  n >= 0
  euler_shifted,
  // sum_{h=1}^{n} s_{n-h}(even(n-1)) (-1)^{h+1} 2^{2h}(2^{2h}-1) B_{2h} / h = 2 (2n-1)!,  n >= 1
  bernoulli_even,
};

IdentitySides euler_factorial_sides(long n, EulerFactorial variant);
bool euler_factorial_identity(long n, EulerFactorial variant);

// sum_{s=0}^{k} C(k+1, s) B_s = 0 for k >= 1.
bool bernoulli_recurrence_holds(long k);
// (1 - 2^{k-1}) B_k = sum_{s=0}^{k} 2^{s-1} C(k, s) B_s.
bool bernoulli_duplication_holds(long k);

// Structural properties of P_k: degree k+1, single monomial parity, P_k(0) = 0,
// P_{2l}(i) = 0, (2l+1) P_{2l} = P'_{2l+1}, 2l P_{2l-1} = P'_{2l} mod x.
bool p_poly_properties_hold(long k);
// x^{2h} = sum_{k=0}^{h-1} (-1)^k C(2h, 2k+1) P_{2h-2k-1}(x),  h >= 1.
bool even_power_expansion_holds(long h);
// Recursive and Bernoulli closed forms agree coefficient by coefficient.
bool p_poly_forms_agree(long k);

}  // namespace mahler::exact

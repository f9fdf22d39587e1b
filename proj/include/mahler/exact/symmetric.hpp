#pragma once

#include <span>
#include <vector>

#include "mahler/exact/rational.hpp"

namespace mahler::exact {

// s_l(a_1, ..., a_k): 1 when l = 0, 0 when l > k (or l < 0).
Rational elementary_symmetric(std::span<const Rational> values, long l);

// All of s_0 .. s_k at once, read off from prod_i (x + a_i).
std::vector<Rational> elementary_symmetric_all(std::span<const Rational> values);

// [1^2, 3^2, ..., (2m-1)^2]
std::vector<Rational> odd_squares(long m);
// [2^2, 4^2, ..., (2m)^2]; 2^2..(2n-2)^2 is even_squares(n - 1).
std::vector<Rational> even_squares(long m);

// Memoized s_l over the two square lattices, the hot path of every identity.
// odd_lattice_symmetric(m, l) = s_l(1^2, ..., (2m-1)^2)
// even_lattice_symmetric(m, l) = s_l(2^2, ..., (2m)^2)
Rational odd_lattice_symmetric(long m, long l);
Rational even_lattice_symmetric(long m, long l);

}  // namespace mahler::exact

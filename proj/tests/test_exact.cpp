#include <doctest.h>

#include <vector>

#include "mahler/exact/identities.hpp"
#include "mahler/exact/numbers.hpp"
#include "mahler/exact/p_poly.hpp"
#include "mahler/exact/symmetric.hpp"

using namespace mahler::exact;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

// B_k from sum_{s=0}^{k} C(k+1, s) B_s = 0
std::vector<Rational> bernoulli_by_recurrence(long n) {
  std::vector<Rational> b{q(1)};
  for (long k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (long s = 0; s < k; ++s) acc += Rational(binomial(k + 1, s)) * b[s];
    b.push_back(-acc / Rational(k + 1));
  }
  return b;
}

// E_n = n! [x^n] 1/cosh x, by power-series division
std::vector<Rational> euler_by_series(long n) {
  std::vector<Rational> cosh(n + 1), inv(n + 1);
  for (long k = 0; k <= n; k += 2) cosh[k] = Rational(1) / Rational(factorial(k));
  for (long k = 0; k <= n; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (long j = 1; j <= k; ++j) acc -= cosh[j] * inv[k - j];
    inv[k] = acc;
  }
  for (long k = 0; k <= n; ++k) inv[k] *= Rational(factorial(k));
  return inv;
}

Rational symmetric_brute(const std::vector<Rational>& v, long l) {
  Rational sum = 0;
  const long k = static_cast<long>(v.size());
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    if (__builtin_popcountl(mask) != l) continue;
    Rational prod = 1;
    for (long i = 0; i < k; ++i)
      if (mask & (1UL << i)) prod *= v[i];
    sum += prod;
  }
  return sum;
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(2) == q(1, 6));
  CHECK(bernoulli(12) == q(-691, 2730));
  CHECK(bernoulli(3) == 0);
  const auto oracle = bernoulli_by_recurrence(60);
  for (long n = 0; n <= 60; ++n) CHECK_MESSAGE(bernoulli(n) == oracle[n], "n = " << n);
}

TEST_CASE("Euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  const auto oracle = euler_by_series(30);
  for (long n = 0; n <= 30; ++n) CHECK_MESSAGE(Rational(euler_number(n)) == oracle[n], "n = " << n);
}

TEST_CASE("elementary symmetric polynomials") {
  const std::vector<Rational> sq{q(4), q(16), q(36)}, small{q(1), q(2), q(3)}, two{q(1), q(2)};
  CHECK(elementary_symmetric(sq, 0) == 1);
  CHECK(elementary_symmetric(small, 2) == 11);
  CHECK(elementary_symmetric(two, 3) == 0);
  const std::vector<Rational> v{q(3), q(-1, 2), q(7, 3), q(5), q(2, 9), q(-4)};
  for (long l = 0; l <= 7; ++l) CHECK(elementary_symmetric(v, l) == symmetric_brute(v, l));
  for (long m = 0; m <= 8; ++m)
    for (long l = 0; l <= m + 1; ++l) {
      CHECK(odd_lattice_symmetric(m, l) == symmetric_brute(odd_squares(m), l));
      CHECK(even_lattice_symmetric(m, l) == symmetric_brute(even_squares(m), l));
    }
}

TEST_CASE("P_k listed values") {
  CHECK(p_poly_recursive(0) == PolyQ({q(0), q(1)}));
  CHECK(p_poly_recursive(1) == PolyQ({q(0), q(0), q(1, 2)}));
  CHECK(p_poly_recursive(2) == PolyQ({q(0), q(1, 3), q(0), q(1, 3)}));
  CHECK(p_poly_recursive(4) == PolyQ({q(0), q(7, 15), q(0), q(2, 3), q(0), q(1, 5)}));
  CHECK(p_poly_closed(0) == PolyQ({q(0), q(1)}));
  CHECK(p_poly_closed(1) == PolyQ({q(0), q(0), q(1, 2)}));
  CHECK(p_poly_closed(5) == PolyQ({q(0), q(0), q(7, 6), q(0), q(5, 6), q(0), q(1, 6)}));
}

TEST_CASE("P_k recursive and closed forms agree, structural properties") {
  for (long k = 0; k <= 40; ++k) {
    CHECK_MESSAGE(p_poly_forms_agree(k), "k = " << k);
    CHECK_MESSAGE(p_poly_properties_hold(k), "k = " << k);
  }
}

TEST_CASE("special values of odd P_k at i") {
  CHECK(p_poly_special_value(1) == q(-1, 2));
  // P_3(i) = i^4/4 + i^2/2 = -1/4
  CHECK(p_poly_special_value(2) == q(-1, 4));
  CHECK(p_poly_special_value(3) == q(-1, 2));
  for (long l = 1; l <= 20; ++l) {
    const GaussianRational at_i = p_poly_recursive(2 * l - 1)(GaussianRational::i());
    CHECK(at_i.im == 0);
    CHECK(at_i.re == p_poly_special_value(l));
    CHECK(at_i.re == Rational(sign_power(l)) * (pow2(2 * l) - 1) * bernoulli(2 * l) / Rational(l));
  }
  CHECK_THROWS_AS(p_poly_special_value(0), std::domain_error);
}

TEST_CASE("lattice exchange identities") {
  const auto first = lattice_exchange_sides(1, 1, LatticeExchange::even_from_odd);
  CHECK(first.lhs == -2);
  CHECK(first.rhs == -2);
  CHECK(lattice_exchange_identity(5, 3, LatticeExchange::even_from_odd));
  CHECK(lattice_exchange_identity(5, 2, LatticeExchange::odd_from_even));
  for (long n = 1; n <= 20; ++n)
    for (long l = 0; l <= n; ++l) {
      if (l >= 1) CHECK(lattice_exchange_identity(n, l, LatticeExchange::even_from_odd));
      CHECK(lattice_exchange_identity(n, l, LatticeExchange::odd_from_even));
    }
  CHECK_THROWS_AS(lattice_exchange_identity(3, 0, LatticeExchange::even_from_odd), std::out_of_range);
  CHECK_THROWS_AS(lattice_exchange_identity(3, 4, LatticeExchange::odd_from_even), std::out_of_range);
}

TEST_CASE("Bernoulli lattice identities") {
  const auto second = bernoulli_lattice_sides(1, 0, BernoulliLattice::constant_term);
  CHECK(second.lhs == 1);
  CHECK(second.rhs == 1);
  CHECK(bernoulli_lattice_identity(7, 3, BernoulliLattice::odd_coefficients));
  CHECK(bernoulli_lattice_identity(6, 0, BernoulliLattice::even_coefficients));
  for (long n = 1; n <= 20; ++n) {
    CHECK(bernoulli_lattice_identity(n, 0, BernoulliLattice::constant_term));
    for (long l = 0; l <= n; ++l) {
      if (l >= 1) CHECK(bernoulli_lattice_identity(n, l, BernoulliLattice::odd_coefficients));
      CHECK(bernoulli_lattice_identity(n, l, BernoulliLattice::even_coefficients));
    }
  }
}

TEST_CASE("Bernoulli-Euler lattice identity") {
  CHECK(bernoulli_euler_identity(1, 1));
  CHECK(bernoulli_euler_identity(4, 2));
  for (long n = 1; n <= 20; ++n)
    for (long l = 1; l <= n; ++l) CHECK(bernoulli_euler_identity(n, l));
  // the Bernoulli side divides by l, so l = 0 is outside the identity
  CHECK_THROWS_AS(bernoulli_euler_identity(6, 0), std::out_of_range);
}

TEST_CASE("Euler and Bernoulli factorial sums") {
  CHECK(euler_factorial_identity(0, EulerFactorial::euler_even));
  CHECK(euler_factorial_identity(5, EulerFactorial::bernoulli_even));
  CHECK(euler_factorial_identity(4, EulerFactorial::euler_shifted));
  for (long n = 0; n <= 20; ++n) {
    CHECK(euler_factorial_identity(n, EulerFactorial::euler_even));
    CHECK(euler_factorial_identity(n, EulerFactorial::euler_shifted));
    if (n >= 1) CHECK(euler_factorial_identity(n, EulerFactorial::bernoulli_even));
  }
}

TEST_CASE("Bernoulli recurrence, duplication and even power expansion") {
  for (long k = 1; k <= 60; ++k) CHECK(bernoulli_recurrence_holds(k));
  for (long k = 0; k <= 40; ++k) CHECK(bernoulli_duplication_holds(k));
  for (long h = 1; h <= 20; ++h) CHECK(even_power_expansion_holds(h));
}

#include "mahler/exact/identities.hpp"

#include <stdexcept>
#include <string>

#include "mahler/exact/numbers.hpp"
#include "mahler/exact/p_poly.hpp"
#include "mahler/exact/polynomial.hpp"
#include "mahler/exact/symmetric.hpp"

namespace mahler::exact {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

// s_{n-j} over odd(n) and even(m), the only two lattices in play.
Rational odd_s(long n, long j) { return odd_lattice_symmetric(n, j); }
Rational even_s(long m, long j) { return even_lattice_symmetric(m, j); }

Rational bin(long n, long k) { return Rational(binomial(n, k)); }
Rational euler(long n) { return Rational(euler_number(n)); }

}  // namespace

IdentitySides lattice_exchange_sides(long n, long l, LatticeExchange variant) {
  require(n >= 1, "lattice exchange: n must be positive");
  IdentitySides out;
  switch (variant) {
    case LatticeExchange::even_from_odd:
      require(l >= 1 && l <= n, "lattice exchange: need 1 <= l <= n");
      out.lhs = Rational(2 * n * sign_power(l)) * even_s(n - 1, n - l);
      for (long h = l; h <= n; ++h)
        out.rhs += Rational(sign_power(h)) * bin(2 * h, 2 * l - 1) * odd_s(n, n - h);
      break;
    case LatticeExchange::odd_from_even:
      require(l >= 0 && l <= n, "lattice exchange: need 0 <= l <= n");
      out.lhs = Rational((2 * n + 1) * sign_power(l)) * odd_s(n, n - l);
      for (long h = l; h <= n; ++h)
        out.rhs += Rational(sign_power(h)) * bin(2 * h + 1, 2 * l) * even_s(n, n - h);
      break;
  }
  return out;
}

bool lattice_exchange_identity(long n, long l, LatticeExchange variant) {
  return lattice_exchange_sides(n, l, variant).holds();
}

IdentitySides bernoulli_lattice_sides(long n, long l, BernoulliLattice variant) {
  require(n >= 1, "bernoulli lattice identity: n must be positive");
  IdentitySides out;
  switch (variant) {
    case BernoulliLattice::odd_coefficients:
      require(l >= 1 && l <= n, "bernoulli lattice identity: need 1 <= l <= n");
      out.lhs = odd_s(n, n - l);
      for (long s = 0; s <= n - l; ++s) {
        out.rhs += even_s(n - 1, n - l - s) * bernoulli(2 * s) * bin(2 * (l + s), 2 * s) *
                   (pow2(2 * s) - 2) * sign_power(s + 1) / Rational(l + s);
      }
      out.rhs *= n;
      break;
    case BernoulliLattice::constant_term: {
      const Rational root = Rational(factorial(2 * n)) / (Rational(factorial(n)) * pow2(n));
      out.lhs = root * root;
      for (long s = 1; s <= n; ++s) {
        out.rhs += even_s(n - 1, n - s) * bernoulli(2 * s) * (pow2(2 * s) - 1) * sign_power(s + 1) /
                   Rational(s);
      }
      out.rhs *= 2 * n;
      break;
    }
    case BernoulliLattice::even_coefficients:
      require(l >= 0 && l <= n, "bernoulli lattice identity: need 0 <= l <= n");
      out.lhs = Rational(2 * l + 1) * even_s(n, n - l);
      for (long s = 0; s <= n - l; ++s) {
        out.rhs += odd_s(n, n - l - s) * bernoulli(2 * s) * bin(2 * (l + s), 2 * s) *
                   (pow2(2 * s) - 2) * sign_power(s + 1);
      }
      out.rhs *= 2 * n + 1;
      break;
  }
  return out;
}

bool bernoulli_lattice_identity(long n, long l, BernoulliLattice variant) {
  return bernoulli_lattice_sides(n, l, variant).holds();
}

IdentitySides bernoulli_euler_sides(long n, long l) {
  require(n >= 1, "bernoulli-euler identity: n must be positive");
  require(l >= 1 && l <= n, "bernoulli-euler identity: need 1 <= l <= n");
  IdentitySides out;
  for (long s = 0; s <= n - l; ++s) {
    out.lhs += even_s(n - 1, n - l - s) * bernoulli(2 * s) * bin(2 * (l + s), 2 * s) * pow2(2 * s) *
               (pow2(2 * s) - 2) * sign_power(s + 1) / Rational(l + s);
  }
  out.lhs *= n;
  for (long k = l; k <= n; ++k)
    out.rhs += Rational(sign_power(k + l)) * bin(2 * k, 2 * l) * odd_s(n, n - k) * euler(2 * (k - l));
  return out;
}

bool bernoulli_euler_identity(long n, long l) { return bernoulli_euler_sides(n, l).holds(); }

IdentitySides euler_factorial_sides(long n, EulerFactorial variant) {
  IdentitySides out;
  switch (variant) {
    case EulerFactorial::euler_even:
      require(n >= 0, "euler factorial identity: n must be nonnegative");
      for (long h = 0; h <= n; ++h) out.lhs += odd_s(n, n - h) * sign_power(h) * euler(2 * h);
      out.rhs = Rational(factorial(2 * n));
      break;
    case EulerFactorial::euler_shifted:
      require(n >= 0, "euler factorial identity: n must be nonnegative");
      for (long h = 0; h <= n; ++h) out.lhs += odd_s(n, n - h) * sign_power(h + 1) * euler(2 * h + 2);
      out.rhs = Rational(factorial(2 * n + 1));
      break;
    case EulerFactorial::bernoulli_even:
      require(n >= 1, "euler factorial identity: n must be positive");
      for (long h = 1; h <= n; ++h) {
        out.lhs += even_s(n - 1, n - h) * sign_power(h + 1) * pow2(2 * h) * (pow2(2 * h) - 1) *
                   bernoulli(2 * h) / Rational(h);
      }
      out.rhs = Rational(2 * factorial(2 * n - 1));
      break;
  }
  return out;
}

bool euler_factorial_identity(long n, EulerFactorial variant) {
  return euler_factorial_sides(n, variant).holds();
}

bool bernoulli_recurrence_holds(long k) {
  require(k >= 1, "bernoulli recurrence: k must be positive");
  Rational sum;
  for (long s = 0; s <= k; ++s) sum += bin(k + 1, s) * bernoulli(s);
  return sum == 0;
}

bool bernoulli_duplication_holds(long k) {
  require(k >= 0, "bernoulli duplication: k must be nonnegative");
  Rational rhs;
  for (long s = 0; s <= k; ++s) rhs += pow2(s - 1) * bin(k, s) * bernoulli(s);
  return (1 - pow2(k - 1)) * bernoulli(k) == rhs;
}

bool p_poly_properties_hold(long k) {
  require(k >= 0, "P_k properties: k must be nonnegative");
  const PolyQ p = p_poly_recursive(k);
  if (p.degree() != k + 1) return false;
  // monomials of P_k have degree of parity opposite to k
  for (long d = 0; d <= p.degree(); ++d)
    if ((d % 2) == (k % 2) && p.coefficient(d) != 0) return false;
  if (p.coefficient(0) != 0) return false;
  if (k % 2 == 0) {
    const long l = k / 2;
    if (l > 0 && p(GaussianRational::i()) != GaussianRational{}) return false;
    PolyQ lhs = p;
    lhs *= Rational(2 * l + 1);
    if (!(lhs == p_poly_recursive(k + 1).derivative())) return false;
  } else {
    const long l = (k + 1) / 2;
    PolyQ lhs = p;
    lhs *= Rational(2 * l);
    if (!(lhs == p_poly_recursive(k + 1).derivative().without_constant())) return false;
  }
  return true;
}

bool even_power_expansion_holds(long h) {
  require(h >= 1, "even power expansion: h must be positive");
  PolyQ sum;
  for (long k = 0; k < h; ++k) {
    PolyQ term = p_poly_recursive(2 * h - 2 * k - 1);
    term *= Rational(sign_power(k)) * bin(2 * h, 2 * k + 1);
    sum += term;
  }
  return sum == PolyQ::monomial(Rational(1), 2 * h);
}

bool p_poly_forms_agree(long k) { return p_poly_recursive(k) == p_poly_closed(k); }

}  // namespace mahler::exact

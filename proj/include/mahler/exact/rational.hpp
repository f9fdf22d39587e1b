#pragma once

#include <gmpxx.h>

#include <string>

namespace mahler::exact {

// Arbitrary-precision integer and rational scalars. mpq_class keeps values in
// lowest terms with a positive denominator after every operation.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const BigInt& numerator, const BigInt& denominator = 1);

BigInt binomial(long n, long k);
BigInt factorial(long n);

// 2^e for any integer e, exact.
Rational pow2(long e);
Rational pow(const Rational& base, unsigned long e);

// (-1)^e as +1 / -1.
constexpr int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

std::string to_string(const Rational& q);

// Exact x + i*y with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator*=(const Rational& c);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator*(GaussianRational a, const Rational& c) { return a *= c; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  bool is_real() const { return sgn(im) == 0; }
};

}  // namespace mahler::exact

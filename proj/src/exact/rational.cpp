#include "mahler/exact/rational.hpp"

#include <stdexcept>

namespace mahler::exact {

Rational make_rational(long numerator, long denominator) {
  return make_rational(BigInt(numerator), BigInt(denominator));
}

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) throw std::domain_error("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational pow2(long e) {
  BigInt p;
  unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, mag);
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational pow(const Rational& base, unsigned long e) {
  Rational r(1);
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator*=(const Rational& c) {
  re *= c;
  im *= c;
  return *this;
}

}  // namespace mahler::exact

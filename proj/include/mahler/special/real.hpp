#pragma once

#include <mpfr.h>

#include <compare>
#include <utility>
#include <string>

#include "mahler/exact/rational.hpp"

namespace mahler::special {

// Working precision in decimal digits plus guard digits; converted to bits
// once. Passed explicitly everywhere, there is no global default.
struct Precision {
  long digits = 50;
  long guard = 15;

  mpfr_prec_t bits() const;
  Precision with_guard(long extra) const { return {digits, guard + extra}; }
};

// Owning MPFR value. Binary operations round to the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long v, mpfr_prec_t bits);
  Real(double v, mpfr_prec_t bits);
  Real(const exact::Rational& q, mpfr_prec_t bits);
  Real(const exact::BigInt& z, mpfr_prec_t bits);
  static Real from_string(const std::string& s, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Fixed-point style scientific string with `digits` significant digits.
  std::string to_string(long digits) const;

 private:
  mpfr_t v_;
};

Real pi(mpfr_prec_t bits);
Real log2_const(mpfr_prec_t bits);
Real abs(Real x);
Real sqrt(Real x);
Real log(Real x);
Real exp(Real x);
Real pow(Real x, long e);
Real pow(Real x, const Real& e);
// 10^e at the given precision
Real ten_pow(long e, mpfr_prec_t bits);
Real max(const Real& a, const Real& b);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t bits = 64) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o);
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  Complex conj() const { return {re, -im}; }
};

// |z| as a real
Real abs(const Complex& z);

// A value with an error bound. `rigorous` is false when the bound comes from a
// heuristic such as the spread of successive extrapolants.
struct HighPrecisionReal {
  Real value;
  Real error;
  bool rigorous = true;
};

struct HighPrecisionComplex {
  Complex value;
  Real error;
  bool rigorous = true;
};

}  // namespace mahler::special

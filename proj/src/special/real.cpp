#include "mahler/special/real.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace mahler::special {

mpfr_prec_t Precision::bits() const {
  if (digits < 1) throw std::invalid_argument("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits + guard) * 3.321928094887362)) + 8;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const exact::Rational& q, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const exact::BigInt& z, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

Real Real::from_string(const std::string& s, mpfr_prec_t bits) {
  Real r(bits);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("not a decimal number: " + s);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, other.bits());
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {

// Raise the precision of `a` so the result of a binary op keeps the larger one.
void widen(mpfr_ptr a, mpfr_srcptr b) {
  if (mpfr_get_prec(b) > mpfr_get_prec(a)) mpfr_prec_round(a, mpfr_get_prec(b), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(v_, o.v_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(v_, o.v_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(v_, o.v_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(v_, o.v_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::string Real::to_string(long digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
  if (digits < 1) digits = 1;
  const std::string fmt = "%." + std::to_string(digits - 1) + "Re";
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, void (*)(char*)> hold(buf, [](char* p) { mpfr_free_str(p); });
  return std::string(buf);
}

Real pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real log2_const(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real abs(Real x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real sqrt(Real x) {
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real log(Real x) {
  mpfr_log(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real exp(Real x) {
  mpfr_exp(x.get(), x.get(), MPFR_RNDN);
  return x;
}

Real pow(Real x, long e) {
  mpfr_pow_si(x.get(), x.get(), e, MPFR_RNDN);
  return x;
}

Real pow(Real x, const Real& e) {
  mpfr_pow(x.get(), x.get(), e.get(), MPFR_RNDN);
  return x;
}

Real ten_pow(long e, mpfr_prec_t bits) { return pow(Real(10L, bits), e); }

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Real abs(const Complex& z) {
  Real r(std::max(z.re.bits(), z.im.bits()));
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

}  // namespace mahler::special

#pragma once

#include <stdexcept>
#include <string>

#include "mahler/special/real.hpp"

namespace mahler::special {

// The fourth roots of unity, the only arguments the polylog code accepts.
// Stored as the exponent e in i^e.
enum class UnitPoint { one = 0, i = 1, minus_one = 2, minus_i = 3 };

inline int exponent(UnitPoint p) { return static_cast<int>(p); }
inline UnitPoint from_exponent(long e) { return static_cast<UnitPoint>(((e % 4) + 4) % 4); }
inline UnitPoint operator*(UnitPoint a, UnitPoint b) { return from_exponent(exponent(a) + exponent(b)); }
inline UnitPoint operator-(UnitPoint a) { return from_exponent(exponent(a) + 2); }
inline UnitPoint power(UnitPoint a, long k) { return from_exponent(exponent(a) * (k % 4)); }
inline bool is_real(UnitPoint p) { return p == UnitPoint::one || p == UnitPoint::minus_one; }

inline UnitPoint parse_unit_point(const std::string& s) {
  if (s == "1") return UnitPoint::one;
  if (s == "-1") return UnitPoint::minus_one;
  if (s == "i") return UnitPoint::i;
  if (s == "-i") return UnitPoint::minus_i;
  throw std::invalid_argument("expected one of 1, -1, i, -i: " + s);
}

inline std::string to_string(UnitPoint p) {
  switch (p) {
    case UnitPoint::one: return "1";
    case UnitPoint::i: return "i";
    case UnitPoint::minus_one: return "-1";
    case UnitPoint::minus_i: return "-i";
  }
  return "?";
}

// z * p for a complex z
inline Complex rotate(const Complex& z, UnitPoint p) {
  switch (p) {
    case UnitPoint::one: return z;
    case UnitPoint::i: return {-z.im, z.re};
    case UnitPoint::minus_one: return {-z.re, -z.im};
    case UnitPoint::minus_i: return {z.im, -z.re};
  }
  return z;
}

// p as a complex number
inline Complex as_complex(UnitPoint p, mpfr_prec_t bits) {
  return rotate(Complex(Real(1L, bits), Real(0L, bits)), p);
}

}  // namespace mahler::special

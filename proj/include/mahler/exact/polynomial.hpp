#pragma once

#include <string>
#include <vector>

#include "mahler/exact/rational.hpp"

namespace mahler::exact {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; trailing
/// zeros are trimmed so the zero polynomial has no coefficients and degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coefficients);

  static PolyQ monomial(const Rational& c, int degree);
  static PolyQ constant(const Rational& c) { return monomial(c, 0); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Zero for indices beyond the degree.
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  GaussianRational operator()(const GaussianRational& x) const;

  PolyQ derivative() const;
  // Drops the constant term (the "mod x" reduction).
  PolyQ without_constant() const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const Rational& c);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const Rational& c) { return a *= c; }
  friend PolyQ operator*(const Rational& c, PolyQ a) { return a *= c; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace mahler::exact

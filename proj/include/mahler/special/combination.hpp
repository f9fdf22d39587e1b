#pragma once

#include <compare>
#include <map>
#include <string>

#include "mahler/exact/rational.hpp"

namespace mahler::special {

enum class ConstantKind {
  zeta,    // zeta(arg), arg >= 2
  lchi4,   // L(chi_{-4}, arg), arg >= 1
  log2,    // log 2
  l3b_ii,  // i * script-L_{3,arg}(i, i), a real number
  one,
};

std::string kind_name(ConstantKind kind);
ConstantKind kind_from_name(const std::string& name);

struct ConstantBasisElement {
  ConstantKind kind = ConstantKind::one;
  long arg = 0;
  long pi_power = 0;

  // zeta(k) and L(chi, k) weigh k, log 2 weighs 1, script-L_{3,b} weighs 3 + b.
  long constant_weight() const;
  long weight() const { return pi_power + constant_weight(); }

  friend auto operator<=>(const ConstantBasisElement&, const ConstantBasisElement&) = default;
};

// Finite Q-linear combination of pi^a * constant. Normal form:
//   zeta(even) and L(chi_{-4}, odd) are rewritten as rational multiples of pi^k,
//   arg is 0 for log2 and one, zero coefficients are dropped.
// Two combinations are equal iff their maps are equal.
class ZetaCombination {
 public:
  using Terms = std::map<ConstantBasisElement, exact::Rational>;

  ZetaCombination() = default;

  static ZetaCombination constant(ConstantKind kind, long arg, long pi_power = 0,
                                  const exact::Rational& coeff = 1);
  static ZetaCombination zeta(long s, long pi_power = 0, const exact::Rational& coeff = 1) {
    return constant(ConstantKind::zeta, s, pi_power, coeff);
  }
  static ZetaCombination lchi4(long s, long pi_power = 0, const exact::Rational& coeff = 1) {
    return constant(ConstantKind::lchi4, s, pi_power, coeff);
  }
  static ZetaCombination log2(long pi_power = 0, const exact::Rational& coeff = 1) {
    return constant(ConstantKind::log2, 0, pi_power, coeff);
  }
  static ZetaCombination l3b_ii(long b, long pi_power = 0, const exact::Rational& coeff = 1) {
    return constant(ConstantKind::l3b_ii, b, pi_power, coeff);
  }
  static ZetaCombination rational(const exact::Rational& q, long pi_power = 0) {
    return constant(ConstantKind::one, 0, pi_power, q);
  }

  void add(ConstantBasisElement element, const exact::Rational& coeff);

  ZetaCombination& operator+=(const ZetaCombination& o);
  ZetaCombination& operator-=(const ZetaCombination& o);
  ZetaCombination& operator*=(const exact::Rational& q);
  // Product of two combinations. Only products with at most one non-rational
  // factor per term are representable; zeta(odd) * zeta(odd) and the like throw
  // std::logic_error.
  ZetaCombination& operator*=(const ZetaCombination& o);
  ZetaCombination times_pi(long a) const;

  friend ZetaCombination operator+(ZetaCombination a, const ZetaCombination& b) { return a += b; }
  friend ZetaCombination operator-(ZetaCombination a, const ZetaCombination& b) { return a -= b; }
  friend ZetaCombination operator*(ZetaCombination a, const exact::Rational& q) { return a *= q; }
  friend ZetaCombination operator*(ZetaCombination a, const ZetaCombination& b) { return a *= b; }
  friend bool operator==(const ZetaCombination&, const ZetaCombination&) = default;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  exact::Rational coefficient(const ConstantBasisElement& e) const;

  // Common weight of every term, or -1 if the combination is not homogeneous
  // (0 for the empty combination).
  long homogeneous_weight() const;

  // e.g. "62*zeta(5) + 14/3*pi^2*zeta(3)"
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace mahler::special

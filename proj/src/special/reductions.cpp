#include "mahler/special/reductions.hpp"

#include <stdexcept>
#include <string>

#include "mahler/exact/numbers.hpp"

namespace mahler::special {

using exact::binomial;
using exact::factorial;
using exact::pow2;
using exact::Rational;
using exact::sign_power;

ZetaCombination li_at_sign(long m, UnitPoint sign, bool regularize) {
  if (!is_real(sign)) throw std::invalid_argument("li_at_sign takes +-1 only");
  if (m < 1) throw std::domain_error("Li_m needs m >= 1");
  if (sign == UnitPoint::one) {
    if (m == 1) {
      if (regularize) return {};
      throw std::domain_error("Li_1(1) diverges");
    }
    return ZetaCombination::zeta(m);
  }
  if (m == 1) return ZetaCombination::log2(0, -1);
  return ZetaCombination::zeta(m, 0, pow2(1 - m) - 1);
}

ZetaCombination bbb_reduce(long r, long s, UnitPoint rho, UnitPoint sigma, bool regularize_li1) {
  if (!is_real(rho) || !is_real(sigma)) throw std::invalid_argument("bbb_reduce takes +-1 arguments only");
  if (r < 1 || s < 1) throw std::domain_error("indices must be positive");
  if ((r + s) % 2 == 0) throw std::domain_error("reduction needs r + s odd");
  if (s == 1 && sigma == UnitPoint::one) throw std::domain_error("Li_{r,1}(rho, 1) diverges");
  if (r == 1 && !regularize_li1) throw std::domain_error("r = 1 needs the Li_1(1) regularization");

  const bool reg = regularize_li1;
  const UnitPoint rs = rho * sigma;
  const long w = r + s;
  const Rational sgn = sign_power(s);
  auto li = [reg](long m, UnitPoint x) { return li_at_sign(m, x, reg); };

  ZetaCombination out = li(w, rs) * Rational(-1, 2);
  if (s % 2 == 0) out += li(r, rho) * li(s, sigma);
  // binomial(n, k) vanishes for k > n, which also keeps Li_1(1) away when its
  // coefficient is zero
  auto pair = [&](long m, const Rational& scale) {
    ZetaCombination t;
    const Rational ca(binomial(m - 1, r - 1));
    const Rational cb(binomial(m - 1, s - 1));
    if (ca != 0) t += li(m, rho) * ca;
    if (cb != 0) t += li(m, sigma) * cb;
    return t * scale;
  };
  out += pair(w, sgn / 2);
  for (long k = 1; 2 * k < w; ++k) out -= li(2 * k, rs) * pair(w - 2 * k, sgn);
  return out;
}

ZetaCombination script_L_double_reduced(long r, long s) {
  const UnitPoint p = UnitPoint::one, m = UnitPoint::minus_one;
  ZetaCombination out = bbb_reduce(r, s, p, p) - bbb_reduce(r, s, m, p) + bbb_reduce(r, s, p, m) -
                        bbb_reduce(r, s, m, m);
  return out * Rational(2);
}

ZetaCombination script_L32h_closed_form(long h) {
  if (h < 1) throw std::out_of_range("script-L_{3,2h} needs h >= 1");
  if (h == 1) return ZetaCombination::zeta(5, 0, Rational(93, 4)) - ZetaCombination::zeta(2) * ZetaCombination::zeta(3, 0, Rational(21, 2));
  ZetaCombination out = ZetaCombination::zeta(2 * h + 3, 0, (pow2(2 * h + 3) - 1) / pow2(2 * h + 1) * (h + 1) * (2 * h + 1));
  out -= ZetaCombination::zeta(2) *
         ZetaCombination::zeta(2 * h + 1, 0, (pow2(2 * h + 1) - 1) / pow2(2 * h) * h * (2 * h + 5));
  for (long k = 2; k <= h - 1; ++k) {
    const Rational c = Rational(binomial(2 * h - 2 * k + 2, 2)) * (pow2(2 * h - 2 * k + 3) - 1) / pow2(2 * h);
    out -= ZetaCombination::zeta(2 * k) * ZetaCombination::zeta(2 * h - 2 * k + 3, 0, c);
  }
  return out;
}

ZetaCombination log_one_plus_x_combination(long h, LogOnePlusXForm form) {
  if (h < 1) throw std::out_of_range("log(1+x) moment needs h >= 1");
  ZetaCombination out;
  if (form == LogOnePlusXForm::li_difference) {
    out += ZetaCombination::zeta(2 * h + 1, 0, Rational(2 * h - 1) * (pow2(2 * h + 1) - 1) / pow2(2 * h + 1));
    out -= ZetaCombination::log2() * ZetaCombination::zeta(2 * h, 0, (pow2(2 * h) - 1) / pow2(2 * h - 1));
    for (long k = 1; k <= h - 1; ++k) {
      const Rational c = (pow2(2 * h + 1 - 2 * k) - 1) * (pow2(2 * k - 1) - 1) / pow2(2 * h - 1);
      out -= ZetaCombination::zeta(2 * k) * ZetaCombination::zeta(2 * h + 1 - 2 * k, 0, c);
    }
    return out;
  }
  const Rational f(factorial(2 * h - 1));
  out += ZetaCombination::zeta(2 * h + 1, 0, -f * (2 * h - 1) * (pow2(2 * h + 1) - 1) / pow2(2 * h + 2));
  out += ZetaCombination::log2(2 * h, Rational(sign_power(h - 1)) * (pow2(2 * h) - 1) * exact::bernoulli(2 * h) / Rational(4 * h));
  for (long k = 1; k <= h - 1; ++k) {
    const Rational c = f / 2 * (pow2(2 * h + 1 - 2 * k) - 1) * (pow2(2 * k - 1) - 1) / pow2(2 * h - 2 * k) *
                       sign_power(k - 1) * exact::bernoulli(2 * k) / Rational(factorial(2 * k));
    out += ZetaCombination::zeta(2 * h + 1 - 2 * k, 2 * k, c);
  }
  return out;
}

ZetaCombination log_one_plus_x2_integral(long h) {
  if (h < 0) throw std::out_of_range("log(1+x^2) moment needs h >= 0");
  auto euler = [](long n) { return Rational(exact::euler_number(n)); };
  ZetaCombination out =
      ZetaCombination::log2(2 * h + 1, Rational(2 * sign_power(h)) * euler(2 * h) / pow2(2 * h + 1));
  for (long l = 1; l <= h; ++l) {
    const Rational c = 2 * Rational(factorial(2 * h)) / Rational(factorial(2 * h - 2 * l)) * (1 - pow2(-2 * l - 1)) *
                       sign_power(h - l) * euler(2 * h - 2 * l) / pow2(2 * h - 2 * l + 1);
    out += ZetaCombination::zeta(2 * l + 1, 2 * h - 2 * l + 1, c);
  }
  return out;
}

ZetaCombination inverse_tangent_integral(long h) {
  if (h < 0) throw std::out_of_range("inverse tangent moment needs h >= 0");
  ZetaCombination out;
  for (long l = 0; l <= h; ++l) {
    const Rational c = exact::bernoulli(2 * l) * Rational(factorial(2 * h)) / Rational(factorial(2 * l)) *
                       (pow2(2 * l - 1) - 1) * sign_power(l + 1) * (h - l + 1) * (pow2(2 * h + 3 - 2 * l) - 1) /
                       pow2(2 * h + 1);
    out += ZetaCombination::zeta(2 * h + 3 - 2 * l, 2 * l, c);
  }
  return out;
}

HighPrecisionReal combination_value(const ZetaCombination& c, const Precision& p, ConstantStore* store) {
  const mpfr_prec_t bits = p.bits();
  Real total(0L, bits);
  Real err(0L, 64);
  bool rigorous = true;
  const Real pi_value = pi(bits);
  for (const auto& [e, coeff] : c.terms()) {
    HighPrecisionReal v = basis_constant_value(e, p, store);
    const Real scale = Real(coeff, bits) * pow(pi_value, e.pi_power);
    total += v.value * scale;
    err += v.error * abs(scale);
    rigorous = rigorous && v.rigorous;
  }
  return {std::move(total), std::move(err), rigorous};
}

}  // namespace mahler::special

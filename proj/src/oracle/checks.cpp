#include "mahler/oracle/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mahler/exact/p_poly.hpp"
#include "mahler/exact/rational.hpp"
#include "mahler/oracle/dilog.hpp"
#include "mahler/special/reductions.hpp"
#include "mahler/special/zeta.hpp"

namespace mahler::oracle {

namespace {

double eval_poly(const exact::PolyQ& p, double x) {
  double acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coefficient(i).get_d();
  return acc;
}

QuadratureCheck compare(const IntegralEstimate& q, double formula, double tolerance) {
  QuadratureCheck c;
  c.quadrature = q.value;
  c.formula = formula;
  c.error_estimate = q.error_estimate;
  c.tolerance = tolerance;
  c.agree = std::abs(q.value - formula) <= c.tolerance;
  return c;
}

}  // namespace

QuadratureCheck kernel_integral_check(double a, double b, int k) {
  if (!(a > 0 && b > 0)) throw std::domain_error("kernel check needs a, b > 0");
  if (a == b) throw std::domain_error("kernel check rejects a = b");
  if (k < 0 || k > 10) throw std::out_of_range("kernel check needs 0 <= k <= 10");
  const double a2 = a * a, b2 = b * b;
  auto f = [=](double x) { return x * std::pow(std::log(x), k) / ((x * x + a2) * (x * x + b2)); };
  const exact::PolyQ pk = exact::p_poly_recursive(k);
  const double half_pi = std::numbers::pi / 2;
  const double formula = std::pow(half_pi, k + 1) *
                         (eval_poly(pk, std::log(a) / half_pi) - eval_poly(pk, std::log(b) / half_pi)) / (a2 - b2);
  return compare(integrate_half_line(f), formula, 1e-9);
}

QuadratureCheck power_kernel_check(double a, double b, double alpha) {
  if (!(a > 0 && b > 0)) throw std::domain_error("power kernel check needs a, b > 0");
  if (a == b) throw std::domain_error("power kernel check rejects a = b");
  if (!(alpha > 0 && alpha < 1)) throw std::domain_error("power kernel check needs 0 < alpha < 1");
  const double a2 = a * a, b2 = b * b;
  auto f = [=](double x) { return std::pow(x, alpha) / ((x * x + a2) * (x * x + b2)); };
  const double formula = std::numbers::pi * (std::pow(a, alpha - 1) - std::pow(b, alpha - 1)) /
                         (2 * std::cos(std::numbers::pi * alpha / 2) * (b2 - a2));
  return compare(integrate_half_line(f), formula, 1e-9);
}

QuadratureCheck length_one_integral_check(int j, DenominatorSign sign) {
  const special::Precision p{30, 10};
  const double jf = exact::factorial(j).get_d();
  const double parity = j % 2 == 0 ? 1.0 : -1.0;
  if (sign == DenominatorSign::minus) {
    if (j < 1 || j > 8) throw std::out_of_range("minus case needs 1 <= j <= 8 (j = 0 diverges)");
    auto f = [=](double x) { return log_power_over_x2_minus_1(x, j); };
    const double closed = -parity * jf * (1 - std::ldexp(1.0, -(j + 1))) * special::zeta(j + 1, p).value.to_double();
    return compare(integrate(f, 0.0, 1.0), closed, 1e-10);
  }
  if (j < 0 || j > 8) throw std::out_of_range("plus case needs 0 <= j <= 8");
  auto f = [=](double x) { return std::pow(std::log(x), j) / (x * x + 1); };
  const double closed = parity * jf * special::dirichlet_L_chi4(j + 1, p).value.to_double();
  return compare(integrate(f, 0.0, 1.0), closed, 1e-10);
}

QuadratureCheck integral_identity_check(IntegralIdentity which, long h) {
  const special::Precision p{30, 10};
  auto value = [&](const special::ZetaCombination& c) { return special::combination_value(c, p).value.to_double(); };
  const int j = static_cast<int>(2 * h);
  switch (which) {
    case IntegralIdentity::log_one_plus_x: {
      if (h < 1) throw std::out_of_range("log(1+x) moment needs h >= 1");
      auto f = [=](double x) { return std::log1p(x) * log_power_over_x2_minus_1(x, j - 1); };
      const auto closed = special::log_one_plus_x_combination(h, special::LogOnePlusXForm::integral);
      return compare(integrate(f, 0.0, 1.0), value(closed), 1e-8);
    }
    case IntegralIdentity::log_one_plus_x2: {
      if (h < 0) throw std::out_of_range("log(1+x^2) moment needs h >= 0");
      auto f = [=](double x) { return std::log1p(x * x) * std::pow(std::log(x), j) / (x * x + 1); };
      return compare(integrate_half_line(f), value(special::log_one_plus_x2_integral(h)), 1e-8);
    }
    case IntegralIdentity::inverse_tangent: {
      if (h < 0) throw std::out_of_range("inverse tangent moment needs h >= 0");
      auto f = [=](double x) { return inverse_tangent_integral(x) * std::pow(std::log(x), j) / (x * x + 1); };
      return compare(integrate_half_line(f), value(special::inverse_tangent_integral(h)), 1e-8);
    }
  }
  throw std::invalid_argument("unknown integral identity");
}

}  // namespace mahler::oracle

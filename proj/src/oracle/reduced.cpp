#include "mahler/oracle/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "mahler/formulas/coefficients.hpp"
#include "mahler/oracle/base_measure.hpp"

namespace mahler::oracle {

using formulas::Family;

namespace {

constexpr double kPi = std::numbers::pi;

// F(x) in the reduced integrand, for x > 0
std::function<double(double)> base_function(Family family, bool even) {
  switch (family) {
    case Family::I: return [](double x) { return base_measure_I(x); };
    case Family::II: return [](double x) { return base_measure_II(x); };
    case Family::III:
      if (even)
        // m(P_{(-1)^n x}) integrated over signed reals, folded onto x > 0
        return [](double x) {
          return (base_measure_III(x, ArgumentMode::real) + base_measure_III(-x, ArgumentMode::real)) / 2;
        };
      return [](double x) { return base_measure_III(x, ArgumentMode::imaginary); };
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

IntegralEstimate reduced_integral(const formulas::FamilySpec& spec, int digits) {
  const long t = spec.n_transforms;
  if (t < 0 || t > 6) throw std::out_of_range("reduced_integral supports 0..6 transforms");
  if (t == 0) {
    if (spec.family != Family::II) throw std::out_of_range("only family II has a zero-transform member");
    return {base_measure_II(1.0) / (kPi * kPi), 1e-15, IntegrationMethod::series, 1, true};
  }
  QuadratureOptions opt;
  opt.rel_tolerance = opt.abs_tolerance = std::pow(10.0, -std::clamp(digits, 3, 14));

  const bool even = t % 2 == 0;
  const long n = even ? t / 2 : (t - 1) / 2;
  // pi^N m = scale * sum
  long pi_power = t;
  double scale = 1;
  if (spec.family == Family::II) pi_power = t + 2;
  if (spec.family == Family::III) {
    pi_power = t + 1;
    if (even) scale = kPi;
  }
  const auto base = base_function(spec.family, even);

  IntegralEstimate total{0, 0, IntegrationMethod::adaptive_quadrature, 0, true};
  auto accumulate = [&](double weight, const Integrand& f) {
    if (weight == 0) return;
    IntegralEstimate e = integrate_half_line(f, opt);
    total.value += weight * e.value;
    total.error_estimate += std::abs(weight) * e.error_estimate;
    total.evaluations += e.evaluations;
  };
  if (even) {
    for (long h = 1; h <= n; ++h) {
      const double w = std::ldexp(1.0, 2 * n) * formulas::coeff_a(n, h - 1).get_d() * std::pow(kPi / 2, 2 * n - 2 * h);
      const int j = static_cast<int>(2 * h - 1);
      accumulate(w, [&, j](double x) { return base(x) * log_power_over_x2_minus_1(x, j); });
    }
  } else {
    for (long h = 0; h <= n; ++h) {
      const double w = std::ldexp(1.0, 2 * n + 1) * formulas::coeff_b(n, h).get_d() * std::pow(kPi / 2, 2 * n - 2 * h);
      const int j = static_cast<int>(2 * h);
      accumulate(w, [&, j](double x) { return base(x) * std::pow(std::log(x), j) / (x * x + 1); });
    }
  }
  const double norm = scale / std::pow(kPi, pi_power);
  total.value *= norm;
  total.error_estimate *= norm;
  return total;
}

}  // namespace mahler::oracle

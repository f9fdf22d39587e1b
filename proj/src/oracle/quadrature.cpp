#include "mahler/oracle/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mahler::oracle {

std::string method_name(IntegrationMethod m) {
  switch (m) {
    case IntegrationMethod::adaptive_quadrature: return "adaptive_quadrature";
    case IntegrationMethod::qmc: return "qmc";
    case IntegrationMethod::series: return "series";
  }
  return "?";
}

namespace {

// |t| <= 4 keeps the abscissae distinct from the endpoints in double precision
constexpr double kTMax = 4.0;

struct Sweep {
  double sum = 0;
  long evaluations = 0;
};

// Adds the nodes t = k*h (k odd when `odd_only`) of the tanh-sinh rule on (a, b).
Sweep sweep(const Integrand& f, double a, double b, double h, bool odd_only) {
  const double width = b - a;
  Sweep s;
  const long kmax = static_cast<long>(std::ceil(kTMax / h));
  for (long k = -kmax; k <= kmax; ++k) {
    if (odd_only && k % 2 == 0) continue;
    const double t = k * h;
    const double u = std::numbers::pi * std::sinh(t);
    // s = 1/(1+e^-u) and its complement, each formed without cancellation
    const double lo = 1.0 / (1.0 + std::exp(u));   // 1 - s
    const double hi = 1.0 / (1.0 + std::exp(-u));  // s
    const double x = u < 0 ? a + width * hi : b - width * lo;
    if (!(x > a && x < b)) continue;
    const double w = std::numbers::pi * std::cosh(t) * hi * lo * width;
    if (w == 0) continue;
    const double fx = f(x);
    ++s.evaluations;
    if (!std::isfinite(fx)) throw std::domain_error("non-finite integrand sample at x = " + std::to_string(x));
    s.sum += w * fx;
  }
  return s;
}

IntegralEstimate level_doubling(const Integrand& f, double a, double b, const QuadratureOptions& opt) {
  double h = 1.0;
  Sweep s = sweep(f, a, b, h, false);
  double raw = s.sum;
  double prev = raw * h;
  IntegralEstimate est{prev, std::abs(prev), IntegrationMethod::adaptive_quadrature, s.evaluations, true};
  for (int level = 1; level <= opt.max_level; ++level) {
    h /= 2;
    Sweep odd = sweep(f, a, b, h, true);
    raw += odd.sum;
    est.evaluations += odd.evaluations;
    const double cur = raw * h;
    est.value = cur;
    est.error_estimate = std::abs(cur - prev);
    prev = cur;
    if (level >= 3 && est.error_estimate <= std::max(opt.abs_tolerance, opt.rel_tolerance * std::abs(cur))) break;
  }
  return est;
}

IntegralEstimate adaptive(const Integrand& f, double a, double b, const QuadratureOptions& opt, int depth) {
  IntegralEstimate est = level_doubling(f, a, b, opt);
  if (est.error_estimate <= std::max(opt.abs_tolerance, opt.rel_tolerance * std::abs(est.value)) ||
      depth >= opt.max_depth)
    return est;
  QuadratureOptions half = opt;
  half.abs_tolerance /= 2;
  const double mid = a + (b - a) / 2;
  IntegralEstimate left = adaptive(f, a, mid, half, depth + 1);
  IntegralEstimate right = adaptive(f, mid, b, half, depth + 1);
  return {left.value + right.value, left.error_estimate + right.error_estimate,
          IntegrationMethod::adaptive_quadrature, est.evaluations + left.evaluations + right.evaluations, true};
}

}  // namespace

IntegralEstimate integrate(const Integrand& f, double a, double b, const QuadratureOptions& opt) {
  if (!(a < b)) throw std::invalid_argument("integrate needs a < b");
  return adaptive(f, a, b, opt, 0);
}

IntegralEstimate integrate_half_line(const Integrand& f, const QuadratureOptions& opt) {
  IntegralEstimate inner = integrate(f, 0.0, 1.0, opt);
  IntegralEstimate tail = integrate([&](double y) { return f(1.0 / y) / (y * y); }, 0.0, 1.0, opt);
  return {inner.value + tail.value, inner.error_estimate + tail.error_estimate,
          IntegrationMethod::adaptive_quadrature, inner.evaluations + tail.evaluations, true};
}

double log_over_x2_minus_1(double x) {
  const double u = x - 1;
  if (std::abs(u) < 1e-3) {
    // log(1+u)/u = 1 - u/2 + u^2/3 - ..., then divide by 2 + u
    double series = 0, power = 1;
    for (int k = 1; k <= 7; ++k) {
      series += (k % 2 == 1 ? 1.0 : -1.0) * power / k;
      power *= u;
    }
    return series / (2 + u);
  }
  return std::log(x) / ((x - 1) * (x + 1));
}

double log_power_over_x2_minus_1(double x, int j) {
  if (j < 1) throw std::invalid_argument("log power must be at least 1");
  return std::pow(std::log(x), j - 1) * log_over_x2_minus_1(x);
}

}  // namespace mahler::oracle

#include "mahler/oracle/dilog.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mahler/exact/numbers.hpp"

namespace mahler::oracle {

namespace {

constexpr int kTerms = 40;
constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6;
constexpr double kZeta3 = 1.2020569031595942854;

const std::array<double, kTerms + 2>& bernoulli_doubles() {
  static const auto table = [] {
    std::array<double, kTerms + 2> b{};
    for (int n = 0; n < kTerms + 2; ++n) b[n] = exact::bernoulli(n).get_d();
    return b;
  }();
  return table;
}

// sum_n B_n u^{n+1}/(n+1)!, valid for |u| < 2 pi
std::complex<double> dilog_bernoulli(std::complex<double> z) {
  const auto& b = bernoulli_doubles();
  const std::complex<double> u = -std::log(1.0 - z);
  std::complex<double> sum = 0, term = u;  // u^{n+1}/(n+1)!
  for (int n = 0; n < kTerms; ++n) {
    sum += b[n] * term;
    term *= u / double(n + 2);
  }
  return sum;
}

}  // namespace

std::complex<double> dilog(std::complex<double> z) {
  if (z == 1.0) return kPi2Over6;
  if (z == 0.0) return 0;
  if (std::abs(z) > 1) {
    const std::complex<double> l = std::log(-z);
    return -dilog(1.0 / z) - kPi2Over6 - 0.5 * l * l;
  }
  if (z.real() > 0.5) return -dilog_bernoulli(1.0 - z) + kPi2Over6 - std::log(z) * std::log(1.0 - z);
  return dilog_bernoulli(z);
}

double inverse_tangent_integral(double x) { return dilog({0.0, x}).imag(); }

double trilog(double x) {
  if (x < 0 || x > 1) throw std::domain_error("trilog is implemented on [0, 1]");
  if (x == 1) return kZeta3;
  if (x <= 0.5) {
    double sum = 0, power = x;
    for (int k = 1; k <= 60; ++k) {
      sum += power / (double(k) * k * k);
      power *= x;
    }
    return sum;
  }
  // Li_3(e^mu) = zeta(3) + zeta(2) mu + (3/2 - log(-mu)) mu^2/2 + sum_{k>=3} zeta(3-k) mu^k/k!
  const auto& b = bernoulli_doubles();
  const double mu = std::log(x);
  double sum = kZeta3 + kPi2Over6 * mu + (1.5 - std::log(-mu)) * mu * mu / 2;
  double term = mu * mu * mu / 6;  // mu^k/k!
  for (int k = 3; k < kTerms; ++k) {
    const int m = k - 3;  // zeta(-m)
    const double zeta_neg = m == 0 ? -0.5 : -b[m + 1] / (m + 1);
    sum += zeta_neg * term;
    term *= mu / (k + 1);
  }
  return sum;
}

double script_L3(double t) {
  if (t < 0 || t > 1) throw std::domain_error("script_L3 is implemented on [0, 1]");
  return 2 * trilog(t) - trilog(t * t) / 4;
}

}  // namespace mahler::oracle

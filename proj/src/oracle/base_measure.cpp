#include "mahler/oracle/base_measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mahler/oracle/dilog.hpp"

namespace mahler::oracle {

double base_measure_I(double alpha_abs) {
  if (alpha_abs < 0) throw std::domain_error("base_measure_I takes |alpha|");
  return alpha_abs > 1 ? std::log(alpha_abs) : 0.0;
}

double base_measure_II(double alpha_abs) {
  if (alpha_abs < 0) throw std::domain_error("base_measure_II takes |alpha|");
  if (alpha_abs <= 1) return 2 * script_L3(alpha_abs);
  return std::numbers::pi * std::numbers::pi * std::log(alpha_abs) + 2 * script_L3(1 / alpha_abs);
}

double base_measure_III(double alpha, ArgumentMode mode) {
  if (mode == ArgumentMode::real) {
    if (alpha > 0) return alpha > 1 ? std::log(alpha) : 0.0;
    return std::log1p(-alpha);
  }
  const double a = std::abs(alpha);
  return std::numbers::pi / 4 * std::log1p(a * a) + inverse_tangent_integral(a);
}

}  // namespace mahler::oracle

#pragma once

#include <functional>
#include <string>

namespace mahler::oracle {

enum class IntegrationMethod { adaptive_quadrature, qmc, series };

std::string method_name(IntegrationMethod m);

// Numeric value with an error estimate. Quadrature errors are differences
// between refinement levels, so heuristic; QMC errors are standard errors over
// independent randomized replicates.
struct IntegralEstimate {
  double value = 0;
  double error_estimate = 0;
  IntegrationMethod method = IntegrationMethod::adaptive_quadrature;
  long evaluations = 0;
  bool heuristic_error = true;
};

struct QuadratureOptions {
  double abs_tolerance = 1e-13;
  double rel_tolerance = 1e-13;
  int max_level = 9;   // step 2^-level in the tanh-sinh variable
  int max_depth = 10;  // bisections of the original interval
};

using Integrand = std::function<double(double)>;

// tanh-sinh on (a, b) with level doubling, bisecting when a level sweep does
// not meet the tolerance. Endpoint singularities of integrable type are fine;
// throws std::domain_error on a non-finite integrand sample.
IntegralEstimate integrate(const Integrand& f, double a, double b, const QuadratureOptions& opt = {});

// (0, inf) split at 1; the tail is mapped through x = 1/y.
IntegralEstimate integrate_half_line(const Integrand& f, const QuadratureOptions& opt = {});

// log x / (x^2 - 1), continuous at x = 1 where it equals 1/2. Uses a series
// within |x - 1| < 1e-3.
double log_over_x2_minus_1(double x);

// log^j x / (x^2 - 1) for j >= 1, built on the function above.
double log_power_over_x2_minus_1(double x, int j);

}  // namespace mahler::oracle

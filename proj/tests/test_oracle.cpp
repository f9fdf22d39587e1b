#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mahler/formulas/families.hpp"
#include "mahler/oracle/base_measure.hpp"
#include "mahler/oracle/checks.hpp"
#include "mahler/oracle/dilog.hpp"
#include "mahler/oracle/reduced.hpp"
#include "mahler/oracle/torus.hpp"
#include "mahler/special/reductions.hpp"

using namespace mahler::oracle;
using mahler::formulas::Family;
using mahler::formulas::FamilySpec;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kCatalan = 0.91596559417721901505;

using Point = std::vector<std::complex<double>>;

// QMC over the torus of a polynomial in the given variables
IntegralEstimate qmc(const std::function<std::complex<double>(const Point&)>& poly, int dim, long samples = 2'000'000) {
  return torus_average([&](const Point& v) { return std::log(std::abs(poly(v))); }, dim, samples, 7).estimate;
}

}  // namespace

TEST_CASE("double-precision polylogs") {
  CHECK(trilog(1.0) == doctest::Approx(kZeta3).epsilon(1e-15));
  CHECK(trilog(0.5) == doctest::Approx(0.53721319360804020094).epsilon(1e-15));
  CHECK(script_L3(1.0) == doctest::Approx(1.75 * kZeta3).epsilon(1e-15));
  CHECK(inverse_tangent_integral(1.0) == doctest::Approx(kCatalan).epsilon(1e-15));
  // Li_2(1/2) = pi^2/12 - log^2 2 / 2
  CHECK(dilog(0.5).real() == doctest::Approx(kPi * kPi / 12 - std::log(2.0) * std::log(2.0) / 2).epsilon(1e-15));
  // Li_2(-1) = -pi^2/12, Li_2(2) = pi^2/4 - i pi log 2
  CHECK(dilog(-1.0).real() == doctest::Approx(-kPi * kPi / 12).epsilon(1e-15));
  CHECK(dilog(2.0).real() == doctest::Approx(kPi * kPi / 4).epsilon(1e-14));
  CHECK(std::abs(dilog(2.0).imag()) == doctest::Approx(kPi * std::log(2.0)).epsilon(1e-14));
  // inversion for the tangent integral: Ti_2(x) - Ti_2(1/x) = pi/2 log x
  for (double x : {1.5, 3.0, 40.0})
    CHECK(inverse_tangent_integral(x) - inverse_tangent_integral(1 / x) == doctest::Approx(kPi / 2 * std::log(x)));
}

TEST_CASE("base measures, listed values") {
  CHECK(base_measure_I(2) == doctest::Approx(std::log(2.0)));
  CHECK(base_measure_I(0.5) == 0);
  CHECK(base_measure_I(1) == 0);
  CHECK(base_measure_II(1) == doctest::Approx(3.5 * kZeta3).epsilon(1e-15));
  CHECK(base_measure_II(0) == 0);
  CHECK(base_measure_II(2) == doctest::Approx(kPi * kPi * std::log(2.0) + 2 * script_L3(0.5)));
  CHECK(base_measure_III(-1, ArgumentMode::real) == doctest::Approx(std::log(2.0)));
  CHECK(base_measure_III(0.5, ArgumentMode::real) == 0);
  CHECK(base_measure_III(0, ArgumentMode::imaginary) == 0);
}

TEST_CASE("base measures against torus sampling") {
  for (double a : {0.5, 2.0}) {
    const auto e = qmc([a](const Point& v) { return (1.0 + v[0]) + a * (1.0 + v[1]) * v[2]; }, 3);
    CHECK(std::abs(e.value - base_measure_II(a) / (kPi * kPi)) < 4 * e.error_estimate + 1e-4);
  }
  for (double a : {-1.0, -0.3, 0.5, 2.0}) {
    const auto e = qmc([a](const Point& v) { return 1.0 + a * v[0] + (1.0 - a) * v[1]; }, 2);
    CHECK(std::abs(e.value - base_measure_III(a, ArgumentMode::real)) < 4 * e.error_estimate + 1e-4);
  }
  // the imaginary-parameter formula only sees |alpha|; both signs are sampled
  const std::complex<double> I(0, 1);
  for (double a : {0.7, -0.7, 1.8, -1.8}) {
    const auto e = qmc([a, I](const Point& v) { return 1.0 + I * a * v[0] + (1.0 - I * a) * v[1]; }, 2);
    CHECK(std::abs(kPi * e.value - base_measure_III(a, ArgumentMode::imaginary)) < kPi * (4 * e.error_estimate + 1e-4));
  }
}

TEST_CASE("kernel integral, listed and seeded cases") {
  const auto first = kernel_integral_check(2, 3, 0);
  CHECK(first.formula == doctest::Approx((std::log(2.0) - std::log(3.0)) / (4 - 9)));
  CHECK(first.agree);
  CHECK(kernel_integral_check(1, 2, 1).agree);
  CHECK(kernel_integral_check(0.5, 5, 4).agree);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ab(0.1, 10.0);
  std::uniform_int_distribution<int> kk(0, 6);
  for (int i = 0; i < 100; ++i) {
    const double a = ab(rng), b = ab(rng);
    const int k = kk(rng);
    CHECK_MESSAGE(kernel_integral_check(a, b, k).agree, "a=" << a << " b=" << b << " k=" << k);
  }
  CHECK_THROWS_AS(kernel_integral_check(2, 2, 1), std::domain_error);
  CHECK_THROWS_AS(kernel_integral_check(1, 2, 11), std::out_of_range);
}

TEST_CASE("power kernel integral") {
  CHECK(power_kernel_check(1, 2, 0.5).agree);
  CHECK(power_kernel_check(3, 1, 0.9).agree);
  CHECK_THROWS_AS(power_kernel_check(2, 2, 0.5), std::domain_error);
  CHECK_THROWS_AS(power_kernel_check(1, 2, 1.0), std::domain_error);
}

TEST_CASE("length-one log integrals") {
  const auto m1 = length_one_integral_check(1, DenominatorSign::minus);
  CHECK(m1.formula == doctest::Approx(0.75 * kPi * kPi / 6));
  CHECK(m1.agree);
  const auto p0 = length_one_integral_check(0, DenominatorSign::plus);
  CHECK(p0.formula == doctest::Approx(kPi / 4));
  CHECK(p0.agree);
  CHECK(length_one_integral_check(4, DenominatorSign::plus).agree);
  for (int j = 1; j <= 8; ++j) CHECK(length_one_integral_check(j, DenominatorSign::minus).agree);
  for (int j = 0; j <= 8; ++j) CHECK(length_one_integral_check(j, DenominatorSign::plus).agree);
  CHECK_THROWS_AS(length_one_integral_check(0, DenominatorSign::minus), std::out_of_range);
}

TEST_CASE("integrand near x = 1 stays finite") {
  for (double x : {1.0, 1 - 1e-12, 1 + 1e-12, 1 - 9.99e-4, 1 + 1.001e-3}) {
    CHECK(std::isfinite(log_over_x2_minus_1(x)));
    if (x != 1.0)
      CHECK(log_over_x2_minus_1(x) == doctest::Approx(std::log1p(x - 1) / ((x - 1) * (x + 1))).epsilon(1e-12));
  }
  CHECK(log_over_x2_minus_1(1.0) == 0.5);
  // both sides of the series switch agree
  CHECK(log_over_x2_minus_1(1 + 0.99999e-3) == doctest::Approx(log_over_x2_minus_1(1 + 1.00001e-3)).epsilon(1e-8));
}

TEST_CASE("quadrature basics") {
  const auto e = integrate([](double x) { return std::log(x) * std::log(x); }, 0, 1);
  CHECK(e.value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(e.heuristic_error);
  CHECK(integrate_half_line([](double x) { return 1 / (1 + x * x); }).value == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK_THROWS_AS(integrate([](double) { return NAN; }, 0, 1), std::domain_error);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 1, 0), std::invalid_argument);
}

TEST_CASE("reduced integrals, listed cases") {
  CHECK(reduced_integral({Family::I, 2}).value == doctest::Approx(7 * kZeta3 / (kPi * kPi)).epsilon(1e-12));
  CHECK(reduced_integral({Family::I, 1}).value == doctest::Approx(2 * kCatalan / kPi).epsilon(1e-12));
  CHECK(reduced_integral({Family::III, 1}).value ==
        doctest::Approx((3.5 * kZeta3 + kPi * kPi / 2 * std::log(2.0)) / (kPi * kPi)).epsilon(1e-12));
  CHECK_THROWS_AS(reduced_integral({Family::I, 7}), std::out_of_range);
  CHECK_THROWS_AS(reduced_integral({Family::I, 0}), std::out_of_range);
}

TEST_CASE("reduced integrals match the closed forms and are stable under refinement") {
  const mahler::special::Precision p{30, 10};
  for (auto f : {Family::I, Family::II, Family::III})
    for (long t = f == Family::II ? 0 : 1; t <= 6; ++t) {
      const auto r = mahler::formulas::evaluate({f, t});
      const double closed =
          mahler::special::combination_value(r.combination, p).value.to_double() / std::pow(kPi, r.pi_normalization);
      const double fine = reduced_integral({f, t}, 13).value;
      const double coarse = reduced_integral({f, t}, 8).value;
      CHECK_MESSAGE(std::abs(fine - closed) < 1e-11, mahler::formulas::family_name(f) << " " << t);
      CHECK(std::abs(fine - coarse) < 1e-8);
    }
}

TEST_CASE("torus sampling is reproducible") {
  const FamilySpec spec{Family::I, 1};
  TorusOptions one_thread, many;
  one_thread.threads = 1;
  many.threads = 5;
  const auto a = torus_qmc(spec, 200'000, 99, one_thread);
  const auto b = torus_qmc(spec, 200'000, 99, many);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
  CHECK(torus_qmc(spec, 200'000, 100).value != a.value);
  CHECK(a.error_estimate > 0);
  CHECK_THROWS_AS(torus_qmc({Family::II, 2}, 1000, 1), std::out_of_range);
  CHECK_THROWS_AS(torus_qmc(spec, 0, 1), std::out_of_range);
}

TEST_CASE("pseudo-random torus error shrinks like N^-1/2") {
  TorusOptions o;
  o.mode = SamplingMode::pseudo_random;
  o.replicates = 64;
  const FamilySpec spec{Family::I, 1};
  const double small = torus_qmc(spec, 64'000, 3, o).error_estimate;
  const double large = torus_qmc(spec, 1'024'000, 3, o).error_estimate;
  // 16x the samples: expect a ratio near 4
  CHECK(small / large > 2.5);
  CHECK(small / large < 6.5);
}

TEST_CASE("torus sampling of the base member of family II") {
  const auto e = torus_qmc({Family::II, 0}, 4'000'000, 11);
  CHECK(std::abs(e.value - 3.5 * kZeta3 / (kPi * kPi)) < 1e-3);
}

TEST_CASE("samples at zeros of P are skipped") {
  // an integrand that is -inf on its first sample only
  long calls = 0;
  const auto e = torus_average(
      [&](const Point&) { return ++calls == 1 ? -INFINITY : 1.0; }, 1, 1000, 1, TorusOptions{SamplingMode::shifted_lattice, 2, 1});
  CHECK(e.skipped == 1);
  CHECK(e.estimate.value == 1.0);
}

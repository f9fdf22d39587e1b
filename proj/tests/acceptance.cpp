// Acceptance gate: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "mahler/cli/verify.hpp"
#include "mahler/formulas/families.hpp"
#include "mahler/formulas/reference_tables.hpp"
#include "mahler/oracle/checks.hpp"
#include "mahler/oracle/reduced.hpp"
#include "mahler/oracle/torus.hpp"
#include "mahler/special/polylog.hpp"
#include "mahler/special/reductions.hpp"
#include "mahler/special/zeta.hpp"

using namespace mahler;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < time_limit_s;
  const bool ok = v.pass && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %d. %s: %s; %.2f s (limit %.0f s)\n", ok ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs,
              time_limit_s);
  std::fflush(stdout);
}

const special::Precision kP{30, 10};

double measure_closed(const formulas::MahlerResult& r) {
  return special::combination_value(r.combination, kP).value.to_double() / std::pow(std::numbers::pi, r.pi_normalization);
}

}  // namespace

int main() {
  criterion(1, "table reproduction, 18 rows, exact", 1, [] {
    long matched = 0;
    std::string bad;
    const auto rows = formulas::compare_reference_tables();
    for (const auto& c : rows) {
      if (c.matches) {
        ++matched;
        continue;
      }
      formulas::MahlerResult printed{c.row.spec, c.row.pi_normalization, c.row.value};
      bad += "; family " + formulas::family_name(c.row.spec.family) + " n=" + std::to_string(c.row.spec.n_transforms) +
             " computed [" + c.computed.combination.to_string() + "] vs tabulated [" + printed.combination.to_string() +
             "]";
    }
    return Verdict{matched == static_cast<long>(rows.size()),
                   std::to_string(matched) + "/" + std::to_string(rows.size()) + " rows equal" + bad};
  });

  criterion(2, "identity suites, n,k <= 20, polynomials k <= 40, exact", 30, [] {
    const auto outcomes = cli::verify_identities({20, 0, 0});
    long ok = 0;
    std::string bad;
    for (const auto& o : outcomes) {
      if (o.passed) ++ok;
      else bad += "; " + o.name + " " + o.detail;
    }
    return Verdict{ok == static_cast<long>(outcomes.size()),
                   std::to_string(ok) + "/" + std::to_string(outcomes.size()) + " identity families hold" + bad};
  });

  criterion(3, "kernel integral vs quadrature, 100 seeded cases, k <= 6, tol 1e-9", 60, [] {
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> ab(0.1, 10.0);
    std::uniform_int_distribution<int> kk(0, 6);
    long ok = 0;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      double a = ab(rng), b = ab(rng);
      while (a == b) b = ab(rng);
      const auto c = oracle::kernel_integral_check(a, b, kk(rng));
      worst = std::max(worst, std::abs(c.quadrature - c.formula));
      if (c.agree) ++ok;
    }
    return Verdict{ok == 100, std::to_string(ok) + "/100 agree, worst |diff| " + sci(worst)};
  });

  criterion(4, "double-zeta reduction vs double series, r+s <= 9 odd, tol 1e-6", 300, [] {
    using special::UnitPoint;
    const special::Precision p{20, 10};
    const UnitPoint signs[] = {UnitPoint::one, UnitPoint::minus_one};
    long cases = 0, ok = 0;
    double worst = 0;
    for (long w = 3; w <= 9; w += 2)
      for (long r = 1; r < w; ++r)
        for (auto rho : signs)
          for (auto sigma : signs) {
            const long s = w - r;
            if (s == 1 && sigma == UnitPoint::one) continue;                          // divergent
            if (r == 1 && rho == UnitPoint::one && sigma == UnitPoint::one) continue;  // divergent
            const double d = special::abs(special::combination_value(special::bbb_reduce(r, s, rho, sigma, r == 1), p).value -
                                          special::multiple_polylog(r, s, rho, sigma, p).value.re)
                                 .to_double();
            worst = std::max(worst, d);
            ++cases;
            if (d <= 1e-6) ++ok;
          }
    const auto series = special::script_L_double(3, 2, UnitPoint::one, p);
    const double l32 =
        special::abs(series.value.re - special::combination_value(special::script_L32h_closed_form(1), p).value).to_double();
    return Verdict{ok == cases && l32 <= 1e-6, std::to_string(ok) + "/" + std::to_string(cases) +
                                                   " convergent cases agree, worst " + sci(worst) +
                                                   "; script-L_{3,2}(1,1) = 93/4 z(5) - 7/4 pi^2 z(3) off by " + sci(l32)};
  });

  criterion(5, "reduced integral vs closed form, all families, n <= 4", 300, [] {
    long cases = 0, ok = 0;
    double worst = 0;
    std::string bad;
    for (auto f : {formulas::Family::I, formulas::Family::II, formulas::Family::III})
      for (long t = f == formulas::Family::II ? 0 : 1; t <= 4; ++t) {
        const double closed = measure_closed(formulas::evaluate({f, t}));
        const double quad = oracle::reduced_integral({f, t}).value;
        const double tol = (f == formulas::Family::II && t % 2 == 1) ? 1e-5 : 1e-7;
        const double d = std::abs(quad - closed);
        worst = std::max(worst, d);
        ++cases;
        if (d <= tol) ++ok;
        else bad += "; family " + formulas::family_name(f) + " n=" + std::to_string(t) + " off by " + sci(d);
      }
    return Verdict{ok == cases, std::to_string(ok) + "/" + std::to_string(cases) + " agree, worst " + sci(worst) + bad};
  });

  criterion(6, "torus QMC, family I n=1, 1e7 samples, within 3 sigma, sigma <= 1e-3", 60, [] {
    const double target = 2 * special::dirichlet_L_chi4(2, kP).value.to_double() / std::numbers::pi;
    const auto e = oracle::torus_qmc({formulas::Family::I, 1}, 10'000'000, 42);
    const double d = std::abs(e.value - target);
    return Verdict{d <= 3 * e.error_estimate && e.error_estimate <= 1e-3,
                   "estimate " + sci(e.value) + " vs 2G/pi " + sci(target) + ", |diff| " + sci(d) + ", sigma " +
                       sci(e.error_estimate)};
  });

  criterion(7, "log(1+x), log(1+x^2), Ti_2 moment identities, h <= 3, tol 1e-8", 60, [] {
    using oracle::IntegralIdentity;
    long cases = 0, ok = 0;
    double worst = 0;
    for (auto which : {IntegralIdentity::log_one_plus_x, IntegralIdentity::log_one_plus_x2, IntegralIdentity::inverse_tangent})
      for (long h = which == IntegralIdentity::log_one_plus_x ? 1 : 0; h <= 3; ++h) {
        const auto c = oracle::integral_identity_check(which, h);
        worst = std::max(worst, std::abs(c.quadrature - c.formula));
        ++cases;
        if (c.agree) ++ok;
      }
    return Verdict{ok == cases, std::to_string(ok) + "/" + std::to_string(cases) + " agree, worst |diff| " + sci(worst)};
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", failures);
  return failures ? 1 : 0;
}

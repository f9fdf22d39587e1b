#include "mahler/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mahler/exact/identities.hpp"
#include "mahler/formulas/coefficients.hpp"
#include "mahler/formulas/reference_tables.hpp"
#include "mahler/oracle/checks.hpp"
#include "mahler/oracle/reduced.hpp"
#include "mahler/oracle/torus.hpp"
#include "mahler/special/reductions.hpp"
#include "mahler/special/zeta.hpp"

namespace mahler::cli {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

// Runs predicate over a range and reports one outcome naming the first failure.
CheckOutcome sweep(const std::string& suite, const std::string& name, long lo, long hi,
                   const std::function<bool(long)>& ok) {
  long count = 0;
  for (long i = lo; i <= hi; ++i, ++count)
    if (!ok(i)) return {suite, name, false, "fails at index " + std::to_string(i)};
  return {suite, name, true, std::to_string(count) + " cases"};
}

CheckOutcome sweep2(const std::string& suite, const std::string& name, long max_n, long l_from,
                    const std::function<long(long)>& l_to, const std::function<bool(long, long)>& ok) {
  long count = 0;
  for (long n = 1; n <= max_n; ++n)
    for (long l = l_from; l <= l_to(n); ++l, ++count)
      if (!ok(n, l)) return {suite, name, false, "fails at n=" + std::to_string(n) + " l=" + std::to_string(l)};
  return {suite, name, true, std::to_string(count) + " cases"};
}

CheckOutcome numeric(const std::string& suite, const std::string& name, const oracle::QuadratureCheck& c) {
  return {suite, name, c.agree,
          "quadrature " + num(c.quadrature) + " closed " + num(c.formula) + " |diff| " +
              num(std::abs(c.quadrature - c.formula)) + " tol " + num(c.tolerance)};
}

}  // namespace

std::vector<CheckOutcome> verify_identities(const VerifyOptions& opt) {
  using namespace exact;
  using formulas::TransferDirection;
  const std::string s = "identities";
  const long n = opt.max_n, k = 2 * opt.max_n;
  auto up_to_n = [](long m) { return m; };
  std::vector<CheckOutcome> out;
  out.push_back(sweep2(s, "lattice exchange, even from odd", n, 1, up_to_n,
                       [](long m, long l) { return lattice_exchange_identity(m, l, LatticeExchange::even_from_odd); }));
  out.push_back(sweep2(s, "lattice exchange, odd from even", n, 0, up_to_n,
                       [](long m, long l) { return lattice_exchange_identity(m, l, LatticeExchange::odd_from_even); }));
  out.push_back(sweep2(s, "Bernoulli lattice, odd coefficients", n, 1, up_to_n, [](long m, long l) {
    return bernoulli_lattice_identity(m, l, BernoulliLattice::odd_coefficients);
  }));
  out.push_back(sweep(s, "Bernoulli lattice, constant term", 1, n,
                      [](long m) { return bernoulli_lattice_identity(m, 0, BernoulliLattice::constant_term); }));
  out.push_back(sweep2(s, "Bernoulli lattice, even coefficients", n, 0, up_to_n, [](long m, long l) {
    return bernoulli_lattice_identity(m, l, BernoulliLattice::even_coefficients);
  }));
  out.push_back(sweep2(s, "Bernoulli-Euler lattice", n, 1, up_to_n,
                       [](long m, long l) { return bernoulli_euler_identity(m, l); }));
  out.push_back(sweep(s, "Euler factorial sum", 0, n,
                      [](long m) { return euler_factorial_identity(m, EulerFactorial::euler_even); }));
  out.push_back(sweep(s, "shifted Euler factorial sum", 0, n,
                      [](long m) { return euler_factorial_identity(m, EulerFactorial::euler_shifted); }));
  out.push_back(sweep(s, "Bernoulli factorial sum", 1, n,
                      [](long m) { return euler_factorial_identity(m, EulerFactorial::bernoulli_even); }));
  out.push_back(sweep(s, "coefficient generating products", 1, n, formulas::coefficient_products_agree));
  out.push_back(sweep(s, "coefficient transfer a to b", 1, n,
                      [](long m) { return formulas::coefficient_transfer_identity(m, TransferDirection::ab); }));
  out.push_back(sweep(s, "coefficient transfer b to a", 0, n,
                      [](long m) { return formulas::coefficient_transfer_identity(m, TransferDirection::ba); }));
  out.push_back(sweep(s, "induction step a to b", 1, n,
                      [](long m) { return formulas::induction_step_identity(m, TransferDirection::ab); }));
  out.push_back(sweep(s, "induction step b to a", 0, n,
                      [](long m) { return formulas::induction_step_identity(m, TransferDirection::ba); }));
  out.push_back(sweep(s, "P_k recursive equals closed form", 0, k, p_poly_forms_agree));
  out.push_back(sweep(s, "P_k degree, parity, zeros, derivatives", 0, k, p_poly_properties_hold));
  out.push_back(sweep(s, "Bernoulli recurrence", 1, k, bernoulli_recurrence_holds));
  out.push_back(sweep(s, "Bernoulli duplication", 0, k, bernoulli_duplication_holds));
  out.push_back(sweep(s, "even power expansion", 1, n, even_power_expansion_holds));
  return out;
}

std::vector<CheckOutcome> verify_tables(const VerifyOptions&) {
  std::vector<CheckOutcome> out;
  for (const auto& c : formulas::compare_reference_tables()) {
    const std::string name = "family " + formulas::family_name(c.row.spec.family) + ", " +
                             std::to_string(c.row.spec.n_transforms) + " transforms";
    formulas::MahlerResult printed{c.row.spec, c.row.pi_normalization, c.row.value};
    out.push_back({"tables", name, c.matches,
                   c.matches ? c.computed.to_string()
                             : "computed " + c.computed.to_string() + " | tabulated " + printed.to_string()});
  }
  for (auto f : {formulas::Family::I, formulas::Family::II, formulas::Family::III}) {
    const long lo = f == formulas::Family::II ? 0 : 1;
    out.push_back(sweep("tables", "weight homogeneity, family " + formulas::family_name(f), lo, 16,
                        [f](long t) { return formulas::evaluate({f, t}).weight_homogeneous(); }));
  }
  return out;
}

std::vector<CheckOutcome> verify_oracle(const VerifyOptions& opt) {
  const std::string s = "oracle";
  std::vector<CheckOutcome> out;
  const special::Precision p{30, 10};
  for (auto f : {formulas::Family::I, formulas::Family::II, formulas::Family::III}) {
    for (long t = f == formulas::Family::II ? 0 : 1; t <= std::min(opt.max_n, 6L); ++t) {
      const auto r = formulas::evaluate({f, t});
      const double closed = special::combination_value(r.combination, p).value.to_double() /
                            std::pow(std::numbers::pi, r.pi_normalization);
      const auto e = oracle::reduced_integral({f, t});
      const double tol = (f == formulas::Family::II && t % 2 == 1) ? std::max(opt.tolerance, 1e-5) : opt.tolerance;
      const double diff = std::abs(e.value - closed);
      out.push_back({s, "reduced integral, family " + formulas::family_name(f) + ", " + std::to_string(t) + " transforms",
                     diff <= tol, "m " + num(closed) + " |diff| " + num(diff) + " tol " + num(tol)});
    }
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ab(0.1, 10.0), al(0.05, 0.95);
  std::uniform_int_distribution<int> kk(0, 6);
  long kernel_ok = 0;
  const long kernel_cases = 20;
  std::string kernel_detail;
  for (long i = 0; i < kernel_cases; ++i) {
    const double a = ab(rng), b = ab(rng);
    const int k = kk(rng);
    const auto c = oracle::kernel_integral_check(a, b, k);
    if (c.agree) ++kernel_ok;
    else if (kernel_detail.empty()) kernel_detail = "first failure a=" + num(a) + " b=" + num(b) + " k=" + std::to_string(k);
  }
  out.push_back({s, "kernel integral, seeded cases", kernel_ok == kernel_cases,
                 std::to_string(kernel_ok) + "/" + std::to_string(kernel_cases) + " " + kernel_detail});
  for (int i = 0; i < 3; ++i) {
    const double a = ab(rng), b = ab(rng), alpha = al(rng);
    out.push_back(numeric(s, "power kernel integral, alpha " + num(alpha), oracle::power_kernel_check(a, b, alpha)));
  }
  for (int j = 1; j <= 8; ++j)
    out.push_back(numeric(s, "log^" + std::to_string(j) + " x/(x^2-1) on (0,1)",
                          oracle::length_one_integral_check(j, oracle::DenominatorSign::minus)));
  for (int j = 0; j <= 8; ++j)
    out.push_back(numeric(s, "log^" + std::to_string(j) + " x/(x^2+1) on (0,1)",
                          oracle::length_one_integral_check(j, oracle::DenominatorSign::plus)));
  for (long h = 0; h <= 3; ++h) {
    if (h >= 1)
      out.push_back(numeric(s, "log(1+x) moment, h=" + std::to_string(h),
                            oracle::integral_identity_check(oracle::IntegralIdentity::log_one_plus_x, h)));
    out.push_back(numeric(s, "log(1+x^2) moment, h=" + std::to_string(h),
                          oracle::integral_identity_check(oracle::IntegralIdentity::log_one_plus_x2, h)));
    out.push_back(numeric(s, "inverse tangent moment, h=" + std::to_string(h),
                          oracle::integral_identity_check(oracle::IntegralIdentity::inverse_tangent, h)));
  }

  const double catalan = special::dirichlet_L_chi4(2, p).value.to_double();
  const auto q = oracle::torus_qmc({formulas::Family::I, 1}, 1'000'000, opt.seed);
  const double target = 2 * catalan / std::numbers::pi;
  out.push_back({s, "torus sample, family I, 1 transform", std::abs(q.value - target) <= 3 * q.error_estimate,
                 "qmc " + num(q.value) + " sigma " + num(q.error_estimate) + " target " + num(target)});
  return out;
}

std::vector<CheckOutcome> run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "identities") return verify_identities(opt);
  if (suite == "tables") return verify_tables(opt);
  if (suite == "oracle") return verify_oracle(opt);
  if (suite == "all") {
    auto out = verify_identities(opt);
    for (auto* f : {&verify_tables, &verify_oracle}) {
      auto more = (*f)(opt);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

nlohmann::json outcomes_to_json(const std::vector<CheckOutcome>& outcomes) {
  nlohmann::json checks = nlohmann::json::array(), failures = nlohmann::json::array();
  for (const auto& o : outcomes) {
    nlohmann::json j = {{"suite", o.suite}, {"name", o.name}, {"passed", o.passed}, {"detail", o.detail}};
    if (!o.passed) failures.push_back(j);
    checks.push_back(std::move(j));
  }
  return {{"checks", checks}, {"failures", failures}, {"passed", failures.empty()}};
}

}  // namespace mahler::cli

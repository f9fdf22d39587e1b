#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "mahler/exact/rational.hpp"
#include "mahler/special/combination.hpp"
#include "mahler/special/constant_store.hpp"
#include "mahler/special/polylog.hpp"
#include "mahler/special/reductions.hpp"
#include "mahler/special/series.hpp"
#include "mahler/special/zeta.hpp"

using namespace mahler::special;
using mahler::exact::Rational;

namespace {

// mpmath at 50 digits
const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
const char* kZeta5 = "1.0369277551433699263313654864570341680570809195019";
const char* kCatalan = "0.91596559417721901505460351493238411077414937428167";
const char* kBeta4 = "0.98894455174110533610842263322837782131586088706273";
const char* kLog2 = "0.69314718055994530941723212145817656807550013436025";

// i script-L_{3,b}(i,i), frozen from the series engine and confirmed by
// quadrature of (-1)^j (4/j!) int_0^1 L_3(x) log^j x dx/(x^2+1), b = j+1
const char* kIL31 = "2.82711656135535384798168130965";
const char* kIL32 = "1.65958243172730890643285370902";
const char* kIL33 = "0.905442887548100789233022600367";
const char* kIL35 = "0.243295478681513937718895235807";

double gap(const Real& a, const char* ref) { return abs(a - Real::from_string(ref, a.bits())).to_double(); }

const Precision p40{40, 12};

}  // namespace

TEST_CASE("Real parsing and formatting") {
  const Real x = Real::from_string("1.25", 128);
  CHECK(x.to_double() == 1.25);
  CHECK(x.to_string(3) == "1.25e+00");
  CHECK_THROWS(Real::from_string("1.2x", 128));
}

TEST_CASE("alternating series acceleration") {
  // log 2 = sum (-1)^k / (k+1)
  const long n = cvz_terms(40);
  const mpfr_prec_t bits = p40.bits();
  const Real v = cvz_alternating([&](long k) { return Real(1L, bits) / Real(k + 1, bits); }, n, bits);
  CHECK(gap(v, kLog2) < 1e-39);
}

TEST_CASE("Richardson extrapolation of zeta(2) partial sums") {
  const mpfr_prec_t bits = 256;
  std::vector<Real> sums;
  Real s(0L, bits);
  const long first = 200;
  for (long k = 1; k < first; ++k) s += Real(1L, bits) / Real(k * k, bits);
  for (long m = first; m <= first + 30; ++m) {
    s += Real(1L, bits) / Real(m * m, bits);
    sums.push_back(s);
  }
  const Real pi2_6 = pi(bits) * pi(bits) / 6L;
  CHECK(abs(richardson(sums, first) - pi2_6).to_double() < 1e-30);
}

TEST_CASE("zeta and L(chi_-4) values") {
  CHECK(gap(zeta(3, p40).value, kZeta3) < 1e-39);
  CHECK(gap(zeta(5, p40).value, kZeta5) < 1e-39);
  CHECK(gap(dirichlet_L_chi4(2, p40).value, kCatalan) < 1e-39);
  CHECK(gap(dirichlet_L_chi4(4, p40).value, kBeta4) < 1e-39);
  const mpfr_prec_t bits = p40.bits();
  CHECK(abs(dirichlet_L_chi4(1, p40).value - pi(bits) / 4L).to_double() < 1e-39);
  CHECK(abs(dirichlet_L_chi4(3, p40).value - pow(pi(bits), 3) / 32L).to_double() < 1e-39);
  for (long s = 2; s <= 16; ++s) CHECK(abs(zeta(s, p40).value - zeta_series(s, p40).value).to_double() < 1e-38);
  for (long s = 1; s <= 15; ++s)
    CHECK(abs(dirichlet_L_chi4(s, p40).value - dirichlet_L_chi4_series(s, p40).value).to_double() < 1e-38);
  CHECK_THROWS(zeta(1, p40));
}

TEST_CASE("single polylogs at unit points") {
  const auto li2i = li_single(2, UnitPoint::i, p40);
  // Li_2(i) = -pi^2/48 + i Catalan
  const mpfr_prec_t bits = p40.bits();
  CHECK(abs(li2i.value.re + pi(bits) * pi(bits) / 48L).to_double() < 1e-38);
  CHECK(gap(li2i.value.im, kCatalan) < 1e-38);
  CHECK(gap(-li_single(1, UnitPoint::minus_one, p40).value.re, kLog2) < 1e-38);
  const auto L3 = script_L_single(3, UnitPoint::one, p40);
  CHECK(abs(L3.value.re - zeta(3, p40).value * Real(7L, bits) / 4L).to_double() < 1e-38);
}

TEST_CASE("length-two polylogs by series") {
  const Precision p{30, 10};
  const auto a = multiple_polylog(1, 2, UnitPoint::one, UnitPoint::minus_one, p);
  CHECK(gap(a.value.re, "0.150257112894949285674967270189") < 1e-26);
  const auto b = multiple_polylog(1, 2, UnitPoint::minus_one, UnitPoint::one, p);
  CHECK(gap(b.value.re, "-0.508215212804684850812131626977") < 1e-26);
  CHECK(gap(i_script_L3_ii(1, p).value.re, kIL31) < 1e-26);
  CHECK(gap(i_script_L3_ii(2, p).value.re, kIL32) < 1e-26);
  CHECK(gap(i_script_L3_ii(3, p).value.re, kIL33) < 1e-26);
  CHECK(gap(i_script_L3_ii(5, p).value.re, kIL35) < 1e-26);
  CHECK(abs(i_script_L3_ii(3, p).value.im).to_double() < 1e-26);
  CHECK_THROWS(multiple_polylog(2, 1, UnitPoint::one, UnitPoint::one, p));
}

TEST_CASE("combination normal form") {
  CHECK(ZetaCombination::zeta(2) == ZetaCombination::rational(Rational(1, 6), 2));
  CHECK(ZetaCombination::lchi4(3) == ZetaCombination::rational(Rational(1, 32), 3));
  const auto c = ZetaCombination::zeta(5, 0, Rational(93, 4)) - ZetaCombination::zeta(3, 2, Rational(7, 4));
  CHECK(c.to_string() == "93/4·ζ(5) - 7/4·π^2·ζ(3)");
  CHECK(c.homogeneous_weight() == 5);
  CHECK((c + ZetaCombination::log2(1)).homogeneous_weight() == -1);
  CHECK((c - c).empty());
  CHECK(ZetaCombination::l3b_ii(3, 1).homogeneous_weight() == 7);
  CHECK(ZetaCombination::zeta(3) * ZetaCombination::zeta(4) == ZetaCombination::zeta(3, 4, Rational(1, 90)));
  CHECK_THROWS_AS(ZetaCombination::zeta(3) * ZetaCombination::zeta(5), std::logic_error);
  CHECK(ZetaCombination::zeta(3).times_pi(2) == ZetaCombination::zeta(3, 2));
}

TEST_CASE("double-zeta reduction matches the series") {
  const Precision p{30, 10};
  const UnitPoint signs[] = {UnitPoint::one, UnitPoint::minus_one};
  long cases = 0;
  for (long w = 3; w <= 9; w += 2)
    for (long r = 1; r < w; ++r) {
      const long s = w - r;
      for (auto rho : signs)
        for (auto sigma : signs) {
          if (s == 1 && sigma == UnitPoint::one) continue;
          if (r == 1 && rho == UnitPoint::one && sigma == UnitPoint::one) continue;
          const double d = abs(combination_value(bbb_reduce(r, s, rho, sigma, true), p).value -
                               multiple_polylog(r, s, rho, sigma, p).value.re)
                               .to_double();
          CHECK_MESSAGE(d < 1e-25, r << "," << s << " at " << to_string(rho) << "," << to_string(sigma));
          ++cases;
        }
    }
  CHECK(cases == 68);
  CHECK_THROWS_AS(bbb_reduce(2, 2, UnitPoint::one, UnitPoint::one), std::domain_error);
  CHECK_THROWS_AS(bbb_reduce(1, 2, UnitPoint::one, UnitPoint::minus_one), std::domain_error);
}

TEST_CASE("script-L_{3,2h}(1,1) closed form") {
  CHECK(script_L32h_closed_form(1) ==
        ZetaCombination::zeta(5, 0, Rational(93, 4)) - ZetaCombination::zeta(3, 2, Rational(7, 4)));
  for (long h = 1; h <= 6; ++h) CHECK(script_L32h_closed_form(h) == script_L_double_reduced(3, 2 * h));
  const Precision p{30, 10};
  for (long h = 1; h <= 2; ++h) {
    const auto series = script_L_double(3, 2 * h, UnitPoint::one, p);
    CHECK(abs(series.value.re - combination_value(script_L32h_closed_form(h), p).value).to_double() < 1e-25);
  }
}

TEST_CASE("log(1+x) moment, two forms") {
  for (long h = 1; h <= 6; ++h) {
    const auto diff = bbb_reduce(1, 2 * h, UnitPoint::minus_one, UnitPoint::one, true) -
                      bbb_reduce(1, 2 * h, UnitPoint::one, UnitPoint::minus_one, true);
    const auto li = log_one_plus_x_combination(h, LogOnePlusXForm::li_difference);
    CHECK(diff == li);
    CHECK(log_one_plus_x_combination(h, LogOnePlusXForm::integral) ==
          li * Rational(-mahler::exact::factorial(2 * h - 1), 2));
  }
}

TEST_CASE("constant store") {
  const auto path = std::filesystem::temp_directory_path() /
                    ("mahler-store-" + std::to_string(std::random_device{}()) + ".txt");
  const ConstantBasisElement z3{ConstantKind::zeta, 3, 0};
  {
    ConstantStore store(path);
    CHECK(store.records().empty());
    const auto v = basis_constant_value(z3, Precision{30, 10}, &store);
    CHECK(gap(v.value, kZeta3) < 1e-29);
    CHECK(store.records().size() == 1);
    CHECK_FALSE(store.insert(z3, 20, v.value));
    CHECK(store.lookup(z3, 30, 128).has_value());
    CHECK_FALSE(store.lookup(z3, 31, 128).has_value());
  }
  {
    ConstantStore reopened(path);
    REQUIRE(reopened.records().size() == 1);
    const auto rec = reopened.records().front();
    CHECK(ConstantStore::parse(ConstantStore::format(rec)).value == rec.value);
    CHECK(rec.digits == 30);
  }
  CHECK_THROWS(ConstantStore::parse("zeta three 0 30 1.2"));
  {
    std::ofstream bad(path, std::ios::trunc);
    bad << "not a store\n";
  }
  CHECK_THROWS_AS(ConstantStore{path}, std::runtime_error);
  std::filesystem::remove(path);
}

#include "mahler/formulas/families.hpp"

#include <stdexcept>

#include "mahler/exact/numbers.hpp"
#include "mahler/exact/symmetric.hpp"

namespace mahler::formulas {

using exact::bernoulli;
using exact::binomial;
using exact::even_lattice_symmetric;
using exact::factorial;
using exact::odd_lattice_symmetric;
using exact::pow2;
using exact::Rational;

std::string family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "I" || s == "1") return Family::I;
  if (s == "II" || s == "2") return Family::II;
  if (s == "III" || s == "3") return Family::III;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::string MahlerResult::to_string() const {
  std::string lhs = pi_normalization == 0   ? "m"
                    : pi_normalization == 1 ? "π·m"
                                            : "π^" + std::to_string(pi_normalization) + "·m";
  return lhs + " = " + combination.to_string();
}

namespace {

Rational fact(long n) { return Rational(factorial(n)); }

long sign(long k) { return k % 2 == 0 ? 1 : -1; }

Rational binom(long top, long bottom_h, long bottom_l, BinomialReading reading) {
  return Rational(binomial(top, reading == BinomialReading::lower_h ? bottom_h : bottom_l));
}

// sum_{l=0}^{n-h} s_{n-h-l}(even(n-1)) C(2(l+h), .) (-1)^l 2^{2l} / (l+h) B_{2l}
Rational family2_inner(long n, long h, BinomialReading reading) {
  Rational sum = 0;
  for (long l = 0; l <= n - h; ++l)
    sum += even_lattice_symmetric(n - 1, n - h - l) * binom(2 * (l + h), 2 * h, 2 * l, reading) * sign(l) *
           pow2(2 * l) / Rational(l + h) * bernoulli(2 * l);
  return sum;
}

// sum_{l=0}^{n-h} s_{n-h-l}(even(n-1)) C(2(l+h), .) (-1)^{l+1} 2^{2l} (2^{2l-1}-1) / (l+h) B_{2l}
Rational family3_inner(long n, long h, BinomialReading reading) {
  Rational sum = 0;
  for (long l = 0; l <= n - h; ++l)
    sum += even_lattice_symmetric(n - 1, n - h - l) * binom(2 * (l + h), 2 * h, 2 * l, reading) * sign(l + 1) *
           pow2(2 * l) * (pow2(2 * l - 1) - 1) / Rational(l + h) * bernoulli(2 * l);
  return sum;
}

// 1/(2n-1)! sum_{h=1}^{n} (2h)! (2^{2h+1}-1)/4 * inner(n, h) * pi^{2n-2h+extra} zeta(2h+1)
ZetaCombination family3_correction(long n, long extra_pi, BinomialReading reading) {
  ZetaCombination out;
  if (n < 1) return out;
  for (long h = 1; h <= n; ++h) {
    Rational c = fact(2 * h) * (pow2(2 * h + 1) - 1) / 4 * family3_inner(n, h, reading) / fact(2 * n - 1);
    out += ZetaCombination::zeta(2 * h + 1, 2 * n - 2 * h + extra_pi, c);
  }
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

}  // namespace

MahlerResult family1(long t) {
  require(t >= 1, "family I needs at least one transform");
  MahlerResult r{{Family::I, t}, t, {}};
  if (t % 2 == 0) {
    const long n = t / 2;
    for (long h = 1; h <= n; ++h) {
      Rational c = even_lattice_symmetric(n - 1, n - h) * fact(2 * h) * (pow2(2 * h + 1) - 1) / 2 / fact(2 * n - 1);
      r.combination += ZetaCombination::zeta(2 * h + 1, 2 * n - 2 * h, c);
    }
  } else {
    const long n = (t - 1) / 2;
    for (long h = 0; h <= n; ++h) {
      Rational c = odd_lattice_symmetric(n, n - h) * fact(2 * h + 1) * pow2(2 * h + 1) / fact(2 * n);
      r.combination += ZetaCombination::lchi4(2 * h + 2, 2 * n - 2 * h, c);
    }
  }
  return r;
}

MahlerResult family2(long t, BinomialReading reading) {
  require(t >= 0, "family II needs a non-negative number of transforms");
  if (t == 0) return {{Family::II, 0}, 2, ZetaCombination::zeta(3, 0, Rational(7, 2))};
  MahlerResult r{{Family::II, t}, t + 2, {}};
  if (t % 2 == 0) {
    const long n = t / 2;
    for (long h = 1; h <= n; ++h) {
      Rational c = fact(2 * h + 2) * (pow2(2 * h + 3) - 1) / 8 * family2_inner(n, h, reading) / fact(2 * n - 1);
      r.combination += ZetaCombination::zeta(2 * h + 3, 2 * n - 2 * h, c);
    }
  } else {
    const long n = (t - 1) / 2;
    for (long h = 0; h <= n; ++h) {
      Rational outer = odd_lattice_symmetric(n, n - h) * pow2(2 * h + 1) / fact(2 * n);
      r.combination += ZetaCombination::l3b_ii(2 * h + 1, 2 * n - 2 * h, outer * fact(2 * h));
      r.combination += ZetaCombination::lchi4(2 * h + 2, 2 * n - 2 * h + 2, outer * fact(2 * h + 1));
    }
  }
  return r;
}

MahlerResult family3(long t, BinomialReading reading) {
  require(t >= 1, "family III needs at least one transform");
  MahlerResult r{{Family::III, t}, t + 1, {}};
  r.combination = ZetaCombination::log2(t + 1, Rational(1, 2));
  if (t % 2 == 0) {
    const long n = t / 2;
    for (long h = 1; h <= n; ++h) {
      Rational c = even_lattice_symmetric(n - 1, n - h) * fact(2 * h) * (pow2(2 * h + 1) - 1) / 4 / fact(2 * n - 1);
      r.combination += ZetaCombination::zeta(2 * h + 1, 2 * n - 2 * h + 1, c);
    }
    r.combination += family3_correction(n, 1, reading);
  } else {
    const long n = (t - 1) / 2;
    for (long h = 0; h <= n; ++h) {
      Rational c = even_lattice_symmetric(n, n - h) * fact(2 * h + 2) * (pow2(2 * h + 3) - 1) / 4 / fact(2 * n + 1);
      r.combination += ZetaCombination::zeta(2 * h + 3, 2 * n - 2 * h, c);
    }
    r.combination += family3_correction(n, 2, reading);
  }
  return r;
}

MahlerResult evaluate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::I: return family1(spec.n_transforms);
    case Family::II: return family2(spec.n_transforms);
    case Family::III: return family3(spec.n_transforms);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace mahler::formulas

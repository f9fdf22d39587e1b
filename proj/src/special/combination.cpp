#include "mahler/special/combination.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mahler/exact/numbers.hpp"

namespace mahler::special {

using exact::Rational;

std::string kind_name(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::zeta: return "zeta";
    case ConstantKind::lchi4: return "Lchi4";
    case ConstantKind::log2: return "log2";
    case ConstantKind::l3b_ii: return "L3b_ii";
    case ConstantKind::one: return "one";
  }
  throw std::logic_error("unknown constant kind");
}

ConstantKind kind_from_name(const std::string& name) {
  for (auto k : {ConstantKind::zeta, ConstantKind::lchi4, ConstantKind::log2, ConstantKind::l3b_ii,
                 ConstantKind::one})
    if (kind_name(k) == name) return k;
  throw std::invalid_argument("unknown constant kind: " + name);
}

long ConstantBasisElement::constant_weight() const {
  switch (kind) {
    case ConstantKind::zeta:
    case ConstantKind::lchi4: return arg;
    case ConstantKind::log2: return 1;
    case ConstantKind::l3b_ii: return 3 + arg;
    case ConstantKind::one: return 0;
  }
  return 0;
}

namespace {

// zeta(2k) = (-1)^{k-1} B_{2k} 2^{2k-1} / (2k)! * pi^{2k}
Rational zeta_even_over_pi(long s) {
  const long k = s / 2;
  return Rational(exact::sign_power(k - 1)) * exact::bernoulli(s) * exact::pow2(s - 1) /
         Rational(exact::factorial(s));
}

// L(chi_{-4}, 2k+1) = (-1)^k E_{2k} / (2^{2k+2} (2k)!) * pi^{2k+1}
Rational lchi4_odd_over_pi(long s) {
  const long k = (s - 1) / 2;
  return Rational(exact::sign_power(k) * exact::euler_number(2 * k)) /
         (Rational(exact::factorial(2 * k)) * exact::pow2(2 * k + 2));
}

}  // namespace

void ZetaCombination::add(ConstantBasisElement e, const Rational& coeff) {
  if (coeff == 0) return;
  if (e.pi_power < 0) throw std::invalid_argument("negative power of pi");
  Rational c = coeff;
  switch (e.kind) {
    case ConstantKind::zeta:
      if (e.arg < 2) throw std::invalid_argument("zeta(s) needs s >= 2");
      if (e.arg % 2 == 0) {
        c *= zeta_even_over_pi(e.arg);
        e = {ConstantKind::one, 0, e.pi_power + e.arg};
      }
      break;
    case ConstantKind::lchi4:
      if (e.arg < 1) throw std::invalid_argument("L(chi_-4, s) needs s >= 1");
      if (e.arg % 2 == 1) {
        c *= lchi4_odd_over_pi(e.arg);
        e = {ConstantKind::one, 0, e.pi_power + e.arg};
      }
      break;
    case ConstantKind::l3b_ii:
      if (e.arg < 1) throw std::invalid_argument("script-L_{3,b} needs b >= 1");
      break;
    case ConstantKind::log2:
    case ConstantKind::one:
      e.arg = 0;
      break;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ZetaCombination ZetaCombination::constant(ConstantKind kind, long arg, long pi_power, const Rational& coeff) {
  ZetaCombination z;
  z.add({kind, arg, pi_power}, coeff);
  return z;
}

ZetaCombination& ZetaCombination::operator+=(const ZetaCombination& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

ZetaCombination& ZetaCombination::operator-=(const ZetaCombination& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

ZetaCombination& ZetaCombination::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= q;
  return *this;
}

ZetaCombination& ZetaCombination::operator*=(const ZetaCombination& o) {
  ZetaCombination out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      if (a.kind != ConstantKind::one && b.kind != ConstantKind::one)
        throw std::logic_error("product " + kind_name(a.kind) + "(" + std::to_string(a.arg) + ") * " +
                               kind_name(b.kind) + "(" + std::to_string(b.arg) +
                               ") has no representation in the constant basis");
      ConstantBasisElement e = a.kind == ConstantKind::one ? b : a;
      e.pi_power = a.pi_power + b.pi_power;
      out.add(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

ZetaCombination ZetaCombination::times_pi(long a) const {
  ZetaCombination out;
  for (const auto& [e, c] : terms_) {
    ConstantBasisElement shifted = e;
    shifted.pi_power += a;
    out.add(shifted, c);
  }
  return out;
}

Rational ZetaCombination::coefficient(const ConstantBasisElement& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

long ZetaCombination::homogeneous_weight() const {
  long w = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      w = e.weight();
      first = false;
    } else if (e.weight() != w) {
      return -1;
    }
  }
  return w;
}

namespace {

std::string constant_text(const ConstantBasisElement& e) {
  switch (e.kind) {
    case ConstantKind::zeta: return "ζ(" + std::to_string(e.arg) + ")";
    case ConstantKind::lchi4: return "L(χ₋₄," + std::to_string(e.arg) + ")";
    case ConstantKind::log2: return "log 2";
    case ConstantKind::l3b_ii: return "i𝓛_{3," + std::to_string(e.arg) + "}(i,i)";
    case ConstantKind::one: return "";
  }
  return "";
}

}  // namespace

std::string ZetaCombination::to_string() const {
  if (terms_.empty()) return "0";
  auto rank = [](ConstantKind k) {
    switch (k) {
      case ConstantKind::zeta: return 0;
      case ConstantKind::lchi4: return 1;
      case ConstantKind::l3b_ii: return 2;
      case ConstantKind::log2: return 3;
      case ConstantKind::one: return 4;
    }
    return 5;
  };
  std::vector<std::pair<ConstantBasisElement, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&rank](const auto& x, const auto& y) {
    if (rank(x.first.kind) != rank(y.first.kind)) return rank(x.first.kind) < rank(y.first.kind);
    return x.first.arg > y.first.arg;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string factors;
    auto append = [&factors](const std::string& f) {
      if (f.empty()) return;
      if (!factors.empty()) factors += "·";
      factors += f;
    };
    const bool bare = e.kind != ConstantKind::one || e.pi_power > 0;
    if (mag != 1 || !bare) append(exact::to_string(mag));
    if (e.pi_power == 1) append("π");
    if (e.pi_power > 1) append("π^" + std::to_string(e.pi_power));
    append(constant_text(e));
    out += factors;
  }
  return out;
}

}  // namespace mahler::special

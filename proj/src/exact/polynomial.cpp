#include "mahler/exact/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace mahler::exact {

PolyQ::PolyQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational PolyQ::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

GaussianRational PolyQ::operator()(const GaussianRational& x) const {
  GaussianRational acc{0, 0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc.re += *it;
  }
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return PolyQ(std::move(d));
}

PolyQ PolyQ::without_constant() const {
  PolyQ p = *this;
  if (!p.coeffs_.empty()) p.coeffs_[0] = 0;
  p.trim();
  return p;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyQ(std::move(r));
}

std::string PolyQ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rational mag = abs(c);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) os << (i == 0 || mag != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os.str();
}

}  // namespace mahler::exact

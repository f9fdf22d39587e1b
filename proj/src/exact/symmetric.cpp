#include "mahler/exact/symmetric.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace mahler::exact {

std::vector<Rational> elementary_symmetric_all(std::span<const Rational> values) {
  std::vector<Rational> s{Rational(1)};
  s.reserve(values.size() + 1);
  for (const auto& a : values) {
    s.emplace_back(0);
    for (size_t l = s.size() - 1; l >= 1; --l) s[l] += s[l - 1] * a;
  }
  return s;
}

Rational elementary_symmetric(std::span<const Rational> values, long l) {
  if (l < 0 || l > static_cast<long>(values.size())) return 0;
  return elementary_symmetric_all(values)[static_cast<size_t>(l)];
}

std::vector<Rational> odd_squares(long m) {
  std::vector<Rational> v;
  for (long j = 1; j <= m; ++j) v.emplace_back((2 * j - 1) * (2 * j - 1));
  return v;
}

std::vector<Rational> even_squares(long m) {
  std::vector<Rational> v;
  for (long j = 1; j <= m; ++j) v.emplace_back((2 * j) * (2 * j));
  return v;
}

namespace {

class LatticeTable {
 public:
  explicit LatticeTable(std::vector<Rational> (*make)(long)) : make_(make) {}

  Rational get(long m, long l) {
    if (m < 0) throw std::out_of_range("lattice size must be nonnegative");
    if (l < 0 || l > m) return 0;
    std::lock_guard lock(mutex_);
    auto it = rows_.find(m);
    if (it == rows_.end()) it = rows_.emplace(m, elementary_symmetric_all(make_(m))).first;
    return it->second[static_cast<size_t>(l)];
  }

 private:
  std::vector<Rational> (*make_)(long);
  std::mutex mutex_;
  std::map<long, std::vector<Rational>> rows_;
};

}  // namespace

Rational odd_lattice_symmetric(long m, long l) {
  static LatticeTable table(&odd_squares);
  return table.get(m, l);
}

Rational even_lattice_symmetric(long m, long l) {
  static LatticeTable table(&even_squares);
  return table.get(m, l);
}

}  // namespace mahler::exact

#include "mahler/exact/numbers.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace mahler::exact {
namespace {

// Akiyama-Tanigawa; yields the B_1 = +1/2 convention, fixed up on lookup.
std::vector<Rational> akiyama_tanigawa(long upto) {
  std::vector<Rational> out(static_cast<size_t>(upto) + 1);
  std::vector<Rational> row(static_cast<size_t>(upto) + 1);
  for (long m = 0; m <= upto; ++m) {
    row[static_cast<size_t>(m)] = make_rational(1, m + 1);
    for (long j = m; j >= 1; --j) {
      auto& a = row[static_cast<size_t>(j - 1)];
      a = j * (a - row[static_cast<size_t>(j)]);
    }
    out[static_cast<size_t>(m)] = row[0];
  }
  return out;
}

struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values;
};

struct EulerCache {
  std::mutex mutex;
  std::vector<BigInt> even_values{BigInt(1)};  // E_0, E_2, E_4, ...
};

}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw std::domain_error("bernoulli: negative index");
  if (n == 1) return make_rational(-1, 2);
  if (n % 2 == 1) return 0;
  static BernoulliCache cache;
  std::lock_guard lock(cache.mutex);
  if (static_cast<long>(cache.values.size()) <= n) {
    long upto = std::max<long>(n, 2 * static_cast<long>(cache.values.size()));
    cache.values = akiyama_tanigawa(std::max<long>(upto, 16));
  }
  return cache.values[static_cast<size_t>(n)];
}

BigInt euler_number(long n) {
  if (n < 0) throw std::domain_error("euler_number: negative index");
  if (n % 2 == 1) return 0;
  static EulerCache cache;
  const long m = n / 2;
  std::lock_guard lock(cache.mutex);
  auto& e = cache.even_values;
  // sech * cosh = 1 gives sum_{k=0}^{j} C(2j, 2k) E_{2k} = 0 for j >= 1.
  for (long j = static_cast<long>(e.size()); j <= m; ++j) {
    BigInt acc = 0;
    for (long k = 0; k < j; ++k) acc += binomial(2 * j, 2 * k) * e[static_cast<size_t>(k)];
    e.push_back(-acc);
  }
  return e[static_cast<size_t>(m)];
}

}  // namespace mahler::exact

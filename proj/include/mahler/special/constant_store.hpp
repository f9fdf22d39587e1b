#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "mahler/special/combination.hpp"
#include "mahler/special/real.hpp"

namespace mahler::special {

// Persisted decimal values of basis constants. File format, one record per line:
//
//   # mahler-constants 1
//   kind arg pi_power digits value
//
// kind is one of zeta, Lchi4, log2, L3b_ii, one; value is a decimal string with
// at least `digits` correct significant digits. Lines starting with '#' after
// the header are comments. A later record for the same constant replaces an
// earlier one only if it has more digits.
//
// Reads may run concurrently; writes are serialized and append to the file.
class ConstantStore {
 public:
  static constexpr const char* header = "# mahler-constants 1";

  struct Record {
    ConstantBasisElement element;
    long digits = 0;
    std::string value;
  };

  // Opens (and creates if missing) the store at `path`. Throws
  // std::runtime_error on unreadable or malformed files.
  explicit ConstantStore(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  // A stored value good to at least `digits` digits, if any.
  std::optional<Real> lookup(const ConstantBasisElement& e, long digits, mpfr_prec_t bits) const;

  // Appends a record unless one with at least as many digits exists.
  // Returns whether anything was written.
  bool insert(const ConstantBasisElement& e, long digits, const Real& value);

  std::vector<Record> records() const;

  static std::string format(const Record& r);
  static Record parse(const std::string& line);

 private:
  using Key = std::tuple<ConstantKind, long, long>;
  static Key key(const ConstantBasisElement& e) { return {e.kind, e.arg, e.pi_power}; }

  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::map<Key, Record> records_;
};

// Value of one basis constant (pi_power ignored), from the store when it holds
// enough digits, computed and stored otherwise. `store` may be null.
HighPrecisionReal basis_constant_value(const ConstantBasisElement& e, const Precision& p, ConstantStore* store);

// Default path: $MAHLER_CONSTANT_STORE if set, else ./mahler-constants.txt.
std::filesystem::path default_store_path();

}  // namespace mahler::special

#include "mahler/special/constant_store.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "mahler/special/polylog.hpp"
#include "mahler/special/zeta.hpp"

namespace mahler::special {

ConstantStore::ConstantStore(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) {
    std::ofstream out(path_);
    if (!out) throw std::runtime_error("cannot create constant store " + path_.string());
    out << header << '\n';
    return;
  }
  std::string line;
  if (!std::getline(in, line) || line != header)
    throw std::runtime_error(path_.string() + ": missing or unsupported header");
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    Record r;
    try {
      r = parse(line);
    } catch (const std::exception& e) {
      throw std::runtime_error(path_.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
    auto [it, inserted] = records_.try_emplace(key(r.element), r);
    if (!inserted && it->second.digits < r.digits) it->second = r;
  }
}

std::string ConstantStore::format(const Record& r) {
  std::ostringstream os;
  os << kind_name(r.element.kind) << ' ' << r.element.arg << ' ' << r.element.pi_power << ' ' << r.digits << ' '
     << r.value;
  return os.str();
}

ConstantStore::Record ConstantStore::parse(const std::string& line) {
  std::istringstream is(line);
  std::string kind, value, extra;
  Record r;
  if (!(is >> kind >> r.element.arg >> r.element.pi_power >> r.digits >> value) || (is >> extra))
    throw std::runtime_error("expected 'kind arg pi_power digits value'");
  r.element.kind = kind_from_name(kind);
  if (r.digits < 1) throw std::runtime_error("digits must be positive");
  Real::from_string(value, 64);  // validates the decimal
  r.value = value;
  return r;
}

std::optional<Real> ConstantStore::lookup(const ConstantBasisElement& e, long digits, mpfr_prec_t bits) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find(key(e));
  if (it == records_.end() || it->second.digits < digits) return std::nullopt;
  return Real::from_string(it->second.value, bits);
}

bool ConstantStore::insert(const ConstantBasisElement& e, long digits, const Real& value) {
  std::unique_lock lock(mutex_);
  auto it = records_.find(key(e));
  if (it != records_.end() && it->second.digits >= digits) return false;
  Record r{e, digits, value.to_string(digits + 2)};
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to constant store " + path_.string());
  out << format(r) << '\n';
  if (!out) throw std::runtime_error("write to constant store failed: " + path_.string());
  records_[key(e)] = std::move(r);
  return true;
}

std::vector<ConstantStore::Record> ConstantStore::records() const {
  std::shared_lock lock(mutex_);
  std::vector<Record> out;
  for (const auto& [k, r] : records_) out.push_back(r);
  return out;
}

HighPrecisionReal basis_constant_value(const ConstantBasisElement& e, const Precision& p, ConstantStore* store) {
  const mpfr_prec_t bits = p.bits();
  ConstantBasisElement bare = e;
  bare.pi_power = 0;
  if (store) {
    if (auto v = store->lookup(bare, p.digits, bits))
      return {std::move(*v), ten_pow(-p.digits, 64), e.kind != ConstantKind::l3b_ii};
  }
  HighPrecisionReal v;
  switch (e.kind) {
    case ConstantKind::zeta: v = zeta(e.arg, p); break;
    case ConstantKind::lchi4: v = dirichlet_L_chi4(e.arg, p); break;
    case ConstantKind::log2: v = {log2_const(bits), ten_pow(-(p.digits + p.guard - 2), 64), true}; break;
    case ConstantKind::one: v = {Real(1L, bits), Real(0L, 64), true}; break;
    case ConstantKind::l3b_ii: {
      HighPrecisionComplex z = i_script_L3_ii(e.arg, p);
      v = {std::move(z.value.re), std::move(z.error), false};
      break;
    }
  }
  if (store && e.kind != ConstantKind::one) store->insert(bare, p.digits, v.value);
  return v;
}

std::filesystem::path default_store_path() {
  if (const char* env = std::getenv("MAHLER_CONSTANT_STORE"); env && *env) return env;
  return "mahler-constants.txt";
}

}  // namespace mahler::special

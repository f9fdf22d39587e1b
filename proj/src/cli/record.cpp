#include "mahler/cli/record.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mahler/oracle/reduced.hpp"
#include "mahler/special/reductions.hpp"

namespace mahler::cli {

using nlohmann::json;
using special::ConstantKind;

namespace {

bool has_arg(ConstantKind k) { return k != ConstantKind::log2 && k != ConstantKind::one; }

std::string format_double(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(16);
  os << std::scientific << v;
  return os.str();
}

// `digits` significant digits, positional unless the exponent is extreme
std::string decimal_string(const special::Real& v, long digits) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), v.get()) < 0) throw std::runtime_error("formatting failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

json to_json(const OutputRecord& r) {
  json terms = json::array();
  for (const auto& [e, c] : r.combination.terms()) {
    terms.push_back({{"kind", special::kind_name(e.kind)},
                     {"arg", has_arg(e.kind) ? json(e.arg) : json(nullptr)},
                     {"pi_power", e.pi_power},
                     {"coeff_num", c.get_num().get_str()},
                     {"coeff_den", c.get_den().get_str()}});
  }
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  return {{"schema", "mahler-record/1"},
          {"family", formulas::family_name(r.spec.family)},
          {"n_transforms", r.spec.n_transforms},
          {"pi_normalization", r.pi_normalization},
          {"combination", terms},
          {"symbolic", r.combination.to_string()},
          {"numeric_value", r.numeric_value},
          {"digits", r.digits},
          {"oracle_value", opt(r.oracle_value)},
          {"oracle_method", opt(r.oracle_method)},
          {"agreement", opt(r.agreement)}};
}

OutputRecord record_from_json(const json& j) {
  try {
    if (j.at("schema") != "mahler-record/1") throw std::invalid_argument("unknown record schema");
    OutputRecord r;
    r.spec.family = formulas::parse_family(j.at("family").get<std::string>());
    r.spec.n_transforms = j.at("n_transforms").get<long>();
    r.pi_normalization = j.at("pi_normalization").get<long>();
    for (const auto& t : j.at("combination")) {
      special::ConstantBasisElement e;
      e.kind = special::kind_from_name(t.at("kind").get<std::string>());
      e.arg = t.at("arg").is_null() ? 0 : t.at("arg").get<long>();
      e.pi_power = t.at("pi_power").get<long>();
      exact::Rational c(exact::BigInt(t.at("coeff_num").get<std::string>()),
                        exact::BigInt(t.at("coeff_den").get<std::string>()));
      c.canonicalize();
      r.combination += special::ZetaCombination::constant(e.kind, e.arg, e.pi_power, c);
    }
    r.numeric_value = j.at("numeric_value").get<std::string>();
    r.digits = j.at("digits").get<long>();
    if (!j.at("oracle_value").is_null()) r.oracle_value = j.at("oracle_value").get<std::string>();
    if (!j.at("oracle_method").is_null()) r.oracle_method = j.at("oracle_method").get<std::string>();
    if (!j.at("agreement").is_null()) r.agreement = j.at("agreement").get<bool>();
    return r;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed record: ") + ex.what());
  }
}

std::string to_text(const OutputRecord& r) {
  formulas::MahlerResult m{r.spec, r.pi_normalization, r.combination};
  std::string out = "family " + formulas::family_name(r.spec.family) + ", " + std::to_string(r.spec.n_transforms) +
                    " transforms\n" + m.to_string() + " ≈ " + r.numeric_value + "\n";
  if (r.oracle_value)
    out += "oracle (" + *r.oracle_method + "): " + *r.oracle_value + (*r.agreement ? "  agrees" : "  DISAGREES") + "\n";
  return out;
}

OutputRecord evaluate_record(const formulas::FamilySpec& spec, long digits, bool with_oracle,
                             special::ConstantStore* store) {
  if (digits < 5 || digits > 10000) throw std::out_of_range("digits must be in [5, 10000]");
  const formulas::MahlerResult m = formulas::evaluate(spec);
  const special::Precision p{digits, 15};
  const special::HighPrecisionReal v = special::combination_value(m.combination, p, store);

  OutputRecord r{spec, m.pi_normalization, m.combination, decimal_string(v.value, digits), digits, {}, {}, {}};
  if (with_oracle) {
    const oracle::IntegralEstimate e = oracle::reduced_integral(spec);
    const double scaled = e.value * std::pow(std::numbers::pi, m.pi_normalization);
    bool script_terms = false;
    for (const auto& [el, c] : m.combination.terms()) script_terms = script_terms || el.kind == ConstantKind::l3b_ii;
    const double tol = script_terms ? 1e-5 : 1e-7;
    const double closed = v.value.to_double();
    r.oracle_value = format_double(scaled);
    r.oracle_method = oracle::method_name(e.method);
    r.agreement = std::abs(e.value - closed / std::pow(std::numbers::pi, m.pi_normalization)) <= tol;
  }
  return r;
}

}  // namespace mahler::cli

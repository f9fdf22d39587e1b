#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mahler/formulas/families.hpp"
#include "mahler/special/constant_store.hpp"

namespace mahler::cli {

// One evaluated family member. numeric_value and oracle_value are values of
// pi^{pi_normalization} m, as decimal strings.
struct OutputRecord {
  formulas::FamilySpec spec;
  long pi_normalization = 0;
  special::ZetaCombination combination;
  std::string numeric_value;
  long digits = 0;
  std::optional<std::string> oracle_value;
  std::optional<std::string> oracle_method;
  std::optional<bool> agreement;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

// Schema "mahler-record/1":
//   {"schema", "family", "n_transforms", "pi_normalization",
//    "combination": [{"kind", "arg", "pi_power", "coeff_num", "coeff_den"}],
//    "symbolic", "numeric_value", "digits", "oracle_value", "oracle_method", "agreement"}
// arg is null for log2 and one; coefficients are decimal strings; the oracle
// fields are null when absent; "symbolic" is informational and ignored on input.
nlohmann::json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);  // throws std::invalid_argument

std::string to_text(const OutputRecord& r);

// Evaluates the closed form at `digits` digits. With `with_oracle`, also runs
// the reduced one-dimensional integral (double precision, n_transforms <= 6)
// and records agreement of m within 1e-7, 1e-5 when the closed form holds
// script-L_{3,b}(i,i) terms.
OutputRecord evaluate_record(const formulas::FamilySpec& spec, long digits, bool with_oracle,
                             special::ConstantStore* store);

}  // namespace mahler::cli

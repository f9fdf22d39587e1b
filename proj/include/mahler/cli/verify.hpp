#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mahler::cli {

struct CheckOutcome {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  long max_n = 20;
  double tolerance = 1e-7;
  std::uint64_t seed = 42;
};

// Exact-core and coefficient identities for n <= max_n, polynomials to 2 max_n.
std::vector<CheckOutcome> verify_identities(const VerifyOptions& opt);
// The tabulated first values and weight homogeneity.
std::vector<CheckOutcome> verify_tables(const VerifyOptions& opt);
// Numerical cross-checks: reduced integrals for n_transforms <= min(max_n, 6),
// kernel and length-one integrals, integral identities and a torus sample.
std::vector<CheckOutcome> verify_oracle(const VerifyOptions& opt);

// suite is identities, tables, oracle or all; throws std::invalid_argument otherwise.
std::vector<CheckOutcome> run_suite(const std::string& suite, const VerifyOptions& opt);

nlohmann::json outcomes_to_json(const std::vector<CheckOutcome>& outcomes);

}  // namespace mahler::cli

// mahler: evaluate, verify and cache the closed forms.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "mahler/cli/record.hpp"
#include "mahler/cli/verify.hpp"
#include "mahler/formulas/families.hpp"
#include "mahler/special/constant_store.hpp"

namespace {

using namespace mahler;

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

std::unique_ptr<special::ConstantStore> open_store(const std::string& flag, bool always) {
  if (!flag.empty()) return std::make_unique<special::ConstantStore>(flag);
  if (always || std::getenv("MAHLER_CONSTANT_STORE"))
    return std::make_unique<special::ConstantStore>(special::default_store_path());
  return nullptr;
}

std::vector<special::ConstantBasisElement> warm_set() {
  using special::ConstantKind;
  std::vector<special::ConstantBasisElement> out;
  for (long s = 3; s <= 21; s += 2) out.push_back({ConstantKind::zeta, s, 0});
  for (long s = 2; s <= 20; s += 2) out.push_back({ConstantKind::lchi4, s, 0});
  out.push_back({ConstantKind::log2, 0, 0});
  for (long b = 1; b <= 9; b += 2) out.push_back({ConstantKind::l3b_ii, b, 0});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mahler measures of the fractional-transform families"};
  app.require_subcommand(1);

  std::string family = "I", format = "text", store_path, suite;
  long n = 1, digits = 30, max_n = 20, warm_digits = 50;
  double tolerance = 1e-7;
  std::uint64_t seed = 42;
  bool with_oracle = false;

  auto* eval = app.add_subcommand("eval", "closed form and numeric value of one family member");
  eval->add_option("--family", family, "I, II or III")->check(CLI::IsMember({"I", "II", "III", "i", "ii", "iii", "1", "2", "3"}));
  eval->add_option("--n", n, "number of transformed variables")->required();
  eval->add_option("--digits", digits, "decimal digits of the numeric value")->check(CLI::Range(5L, 10000L));
  eval->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  eval->add_flag("--oracle", with_oracle, "also compute the reduced one-dimensional integral");
  eval->add_option("--store", store_path, "constant store file");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "identities, tables, oracle or all")
      ->required()
      ->check(CLI::IsMember({"identities", "tables", "oracle", "all"}));
  verify->add_option("--max-n", max_n, "largest n for the exact and oracle sweeps")->check(CLI::Range(1L, 200L));
  verify->add_option("--tolerance", tolerance, "oracle tolerance on m")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for sampled cases");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* constants = app.add_subcommand("constants", "inspect or fill the constant store");
  constants->require_subcommand(1);
  constants->add_option("--store", store_path, "constant store file");
  auto* list = constants->add_subcommand("list", "print stored records");
  auto* warm = constants->add_subcommand("warm", "compute the standard constants");
  warm->add_option("digits", warm_digits, "decimal digits")->check(CLI::Range(5L, 10000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) {
      for (auto& c : family) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      const formulas::FamilySpec spec{formulas::parse_family(family), n};
      auto store = open_store(store_path, false);
      const cli::OutputRecord r = cli::evaluate_record(spec, digits, with_oracle, store.get());
      if (format == "json") std::cout << cli::to_json(r).dump(2) << "\n";
      else std::cout << cli::to_text(r);
      return r.agreement.value_or(true) ? kOk : kFailed;
    }
    if (*verify) {
      const auto outcomes = cli::run_suite(suite, {max_n, tolerance, seed});
      const auto report = cli::outcomes_to_json(outcomes);
      if (format == "json") {
        std::cout << report.dump(2) << "\n";
      } else {
        for (const auto& o : outcomes)
          std::cout << (o.passed ? "PASS " : "FAIL ") << o.suite << ": " << o.name << "  [" << o.detail << "]\n";
        if (!report["passed"].get<bool>()) std::cout << report["failures"].dump() << "\n";
      }
      return report["passed"].get<bool>() ? kOk : kFailed;
    }
    if (*constants) {
      auto store = open_store(store_path, true);
      if (*list) {
        for (const auto& r : store->records()) std::cout << special::ConstantStore::format(r) << "\n";
        return kOk;
      }
      if (*warm) {
        const special::Precision p{warm_digits, 15};
        for (const auto& e : warm_set()) {
          special::basis_constant_value(e, p, store.get());
          std::cout << special::kind_name(e.kind) << " " << e.arg << " ready at " << warm_digits << " digits\n";
        }
        return kOk;
      }
    }
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

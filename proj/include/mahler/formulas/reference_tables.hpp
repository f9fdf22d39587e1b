#pragma once

#include <string>
#include <vector>

#include "mahler/formulas/families.hpp"

namespace mahler::formulas {

// The eighteen tabulated first values, transcribed verbatim:
// pi^{pi_normalization} m = value.
struct TableRow {
  FamilySpec spec;
  long pi_normalization = 0;
  ZetaCombination value;
};

const std::vector<TableRow>& reference_table_rows();

struct TableComparison {
  TableRow row;
  MahlerResult computed;
  bool matches = false;  // same normalization and exactly equal combinations
  ZetaCombination difference;  // computed - tabulated
};

std::vector<TableComparison> compare_reference_tables();

}  // namespace mahler::formulas

#include "mahler/formulas/reference_tables.hpp"

namespace mahler::formulas {

namespace {

using Z = ZetaCombination;
using exact::Rational;

Rational q(long num, long den = 1) { return Rational(num, den); }

std::vector<TableRow> build() {
  std::vector<TableRow> rows;
  auto add = [&](Family f, long t, long pi_norm, Z value) { rows.push_back({{f, t}, pi_norm, std::move(value)}); };

  add(Family::I, 2, 2, Z::zeta(3, 0, 7));
  add(Family::I, 4, 4, Z::zeta(5, 0, 62) + Z::zeta(3, 2, q(14, 3)));
  add(Family::I, 6, 6, Z::zeta(7, 0, 381) + Z::zeta(5, 2, 62) + Z::zeta(3, 4, q(56, 15)));
  add(Family::I, 8, 8, Z::zeta(9, 0, 2044) + Z::zeta(7, 2, 508) + Z::zeta(5, 4, q(868, 15)) + Z::zeta(3, 6, q(16, 5)));
  add(Family::I, 1, 1, Z::lchi4(2, 0, 2));
  add(Family::I, 3, 3, Z::lchi4(4, 0, 24) + Z::lchi4(2, 2));
  add(Family::I, 5, 5, Z::lchi4(6, 0, 160) + Z::lchi4(4, 2, 20) + Z::lchi4(2, 4, q(3, 4)));
  add(Family::I, 7, 7,
      Z::lchi4(8, 0, 896) + Z::lchi4(6, 2, q(560, 3)) + Z::lchi4(4, 4, q(259, 15)) + Z::lchi4(2, 6, q(5, 8)));

  add(Family::II, 0, 2, Z::zeta(3, 0, q(7, 2)));
  add(Family::II, 2, 4, Z::zeta(5, 0, 93));
  add(Family::II, 4, 6, Z::zeta(7, 0, q(1905, 2)) + Z::zeta(5, 2, 31));
  add(Family::II, 6, 8, Z::zeta(9, 0, 7154) + Z::zeta(7, 2, 635) + Z::zeta(5, 4, q(248, 15)));
  add(Family::II, 1, 3, Z::lchi4(2, 2, 2) + Z::l3b_ii(1, 0, 2));
  add(Family::II, 3, 5, Z::lchi4(4, 2, 24) + Z::lchi4(2, 4) + Z::l3b_ii(3, 0, 16) + Z::l3b_ii(1, 1, 4));

  add(Family::III, 2, 3, Z::zeta(3, 1, q(21, 4)) + Z::log2(3, q(1, 2)));
  add(Family::III, 4, 5, Z::zeta(5, 1, q(155, 4)) + Z::zeta(3, 3, q(14, 3)) + Z::log2(5, q(1, 2)));
  add(Family::III, 1, 2, Z::zeta(3, 0, q(7, 2)) + Z::log2(2, q(1, 2)));
  add(Family::III, 3, 4, Z::zeta(5, 0, 31) + Z::zeta(3, 2, q(7, 3)) + Z::log2(4, q(1, 2)));
  return rows;
}

}  // namespace

const std::vector<TableRow>& reference_table_rows() {
  static const std::vector<TableRow> rows = build();
  return rows;
}

std::vector<TableComparison> compare_reference_tables() {
  std::vector<TableComparison> out;
  for (const auto& row : reference_table_rows()) {
    MahlerResult r = evaluate(row.spec);
    const bool same = r.pi_normalization == row.pi_normalization && r.combination == row.value;
    out.push_back({row, r, same, r.combination - row.value});
  }
  return out;
}

}  // namespace mahler::formulas

#pragma once

#include <string>

#include "mahler/special/combination.hpp"

namespace mahler::formulas {

using special::ZetaCombination;

// I:   m(prod(1+x_j) + prod(1-x_j) z)
// II:  m((1+x) prod(1+x_j) + (1+y) prod(1-x_j) z)
// III: m(prod(1+x_j) + prod(1-x_j) x + (prod(1+x_j) - prod(1-x_j)) y)
// with n_transforms variables x_1..x_n.
enum class Family { I, II, III };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // "I", "II", "III" or 1, 2, 3

struct FamilySpec {
  Family family = Family::I;
  long n_transforms = 1;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// pi^{pi_normalization} * m(P) = combination
struct MahlerResult {
  FamilySpec spec;
  long pi_normalization = 0;
  ZetaCombination combination;

  // Weight of the closed form: one more than the power of pi it is scaled by.
  long expected_weight() const { return pi_normalization + 1; }
  bool weight_homogeneous() const { return combination.homogeneous_weight() == expected_weight(); }
  std::string to_string() const;
};

// The inner binomial of the Bernoulli correction sums can be read as
// C(2(l+h), 2h) or C(2(l+h), 2l). They coincide, but both are selectable.
enum class BinomialReading { lower_h, lower_l };

// n_transforms >= 1
MahlerResult family1(long n_transforms);
// n_transforms >= 0; 0 is the base polynomial (1+x) + (1+y) z
MahlerResult family2(long n_transforms, BinomialReading reading = BinomialReading::lower_h);
// n_transforms >= 1
MahlerResult family3(long n_transforms, BinomialReading reading = BinomialReading::lower_l);

MahlerResult evaluate(const FamilySpec& spec);

}  // namespace mahler::formulas

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ca/multipoly.hpp"

namespace ca {

struct PurePower {
  unsigned variable;  // 1-based index j of a_j
  unsigned exponent;
  mpz_class coefficient;

  friend bool operator==(const PurePower&, const PurePower&) = default;
};

/// Every monomial of R supported on exactly one variable.
std::vector<PurePower> purePowerScan(const MultiPoly& r);

struct ClaimResult {
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string detail;
};

/// Outcome of checking the structural statements about R_i. A failed claim
/// is recorded here, never thrown.
struct TheoremReport {
  unsigned d = 0;
  unsigned i = 0;
  Ring ring = Ring::integers();
  std::vector<PurePower> purePowers;
  mpz_class expectedPurePowerCoeff;
  std::vector<Monomial> minDegreeMonomials;
  std::map<std::string, ClaimResult> claims;
  /// Degenerations that are expected mod p (e.g. a vanishing pure power).
  std::vector<std::string> findings;

  bool allPass() const;
};

inline const std::vector<std::string>& theoremClaimNames() {
  static const std::vector<std::string> names{
      "pure-power-coefficient", "only-pure-powers",      "divisibility",           "degree-cap",
      "min-degree-unique",      "min-degree-coefficient", "subset-oracle-agreement"};
  return names;
}

/// (-1)^{d-i} (C(d,i) - 1)^{d-i}: coefficient of a_{d-i}^d in R_i.
mpz_class expectedPurePowerCoefficient(unsigned d, unsigned i);
/// Coefficient of the minimal-degree monomial a_{d-1}^{d-i} a_{d-i}:
/// (-1)^{(d-1)(d-i)} C(d,i)^{d-1} for i >= 2, and (1-d)^{d-1} for i = 1.
mpz_class expectedMinDegreeCoefficient(unsigned d, unsigned i);
/// a_{d-1}^{d-i} a_{d-i} as an exponent vector over d-1 variables.
ExponentVector minDegreeExponents(unsigned d, unsigned i);

/// Checks every claim against a precomputed R_i (over Z, or reduced mod p).
TheoremReport checkTheorem(unsigned d, unsigned i, const MultiPoly& r);
TheoremReport checkTheorem(unsigned d, unsigned i);

/// Same report; restricted to the range the minimal-degree statement is
/// made for (d >= 3, 2 <= i <= d-1).
TheoremReport checkProposition(unsigned d, unsigned i, const MultiPoly& r);
TheoremReport checkProposition(unsigned d, unsigned i);

/// Size-m subset of {1, ..., 2m}, m = d - i, with no two members differing
/// by m. k counts the complement's members in the upper half.
struct JSubset {
  std::uint32_t members = 0;  // bit j-1 <-> element j
  unsigned k = 0;

  std::vector<unsigned> elements() const;
};

/// All J-subsets, found by filtering every size-(d-i) subset of {1..2(d-i)}.
std::vector<JSubset> enumerateJSubsets(unsigned d, unsigned i);

/// Sum over J-subsets of (-1)^k C(d,i)^k.
mpz_class coefficientViaSubsets(unsigned d, unsigned i);

}  // namespace ca

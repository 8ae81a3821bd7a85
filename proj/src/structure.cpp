#include "ca/structure.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "ca/error.hpp"
#include "ca/hasse.hpp"
#include "ca/sylvester.hpp"

namespace ca {

namespace {

void requireRange(unsigned d, unsigned i) {
  if (d < 2 || i < 1 || i > d - 1) {
    throw DomainError("need d >= 2 and 1 <= i <= d-1 (got d=" + std::to_string(d) + ", i=" + std::to_string(i) +
                      ")");
  }
}

mpz_class power(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

std::string monomialText(const mpz_class& c, const ExponentVector& e) {
  return MultiPoly::monomial(Ring::integers(), c, e).toString();
}

std::string varPower(unsigned var, unsigned exp) {
  return "a" + std::to_string(var) + (exp == 1 ? "" : "^" + std::to_string(exp));
}

ClaimResult claim(bool pass, std::string expected, std::string actual, std::string detail = {}) {
  return {pass, std::move(expected), std::move(actual), std::move(detail)};
}

}  // namespace

bool TheoremReport::allPass() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& kv) { return kv.second.pass; });
}

std::vector<PurePower> purePowerScan(const MultiPoly& r) {
  if (r.isZero()) throw DomainError("pure-power scan of the zero polynomial");
  std::vector<PurePower> out;
  for (const auto& t : r.sortedTerms()) {
    unsigned support = 0, var = 0;
    for (unsigned k = 0; k < t.exponents.size(); ++k)
      if (t.exponents[k]) {
        ++support;
        var = k;
      }
    if (support == 1) out.push_back({var + 1, t.exponents[var], t.coefficient});
  }
  return out;
}

mpz_class expectedPurePowerCoefficient(unsigned d, unsigned i) {
  requireRange(d, i);
  mpz_class v = power(binomial(d, i) - 1, d - i);
  return (d - i) % 2 ? mpz_class(-v) : v;
}

mpz_class expectedMinDegreeCoefficient(unsigned d, unsigned i) {
  requireRange(d, i);
  if (i == 1) return power(mpz_class(1) - d, d - 1);
  mpz_class v = power(binomial(d, i), d - 1);
  return (static_cast<unsigned long>(d - 1) * (d - i)) % 2 ? mpz_class(-v) : v;
}

ExponentVector minDegreeExponents(unsigned d, unsigned i) {
  requireRange(d, i);
  ExponentVector e(d - 1);
  e.set(d - 2, d - i);
  e.set(d - i - 1, e[d - i - 1] + 1);
  return e;
}

TheoremReport checkTheorem(unsigned d, unsigned i, const MultiPoly& r) {
  requireRange(d, i);
  if (r.varCount() != d - 1) throw StructuralError("R_i has the wrong number of variables");
  if (r.isZero()) throw DomainError("R_i is the zero polynomial");

  const Ring& ring = r.ring();
  const bool modular = !ring.isIntegers();
  const std::string modText = modular ? " mod " + ring.modulus().get_str() : "";
  const unsigned target = d - i;  // a_{d-i}

  TheoremReport rep;
  rep.d = d;
  rep.i = i;
  rep.ring = ring;
  rep.expectedPurePowerCoeff = expectedPurePowerCoefficient(d, i);
  rep.purePowers = purePowerScan(r);

  // Pure power a_{d-i}^d and its coefficient.
  const ExponentVector pureExp = ExponentVector::unit(d - 1, target, d);
  const mpz_class expectedPure = ring.normalize(rep.expectedPurePowerCoeff);
  const mpz_class actualPure = coefficientOf(r, pureExp);
  rep.claims["pure-power-coefficient"] =
      claim(actualPure == expectedPure, expectedPure.get_str(), actualPure.get_str(),
            "coefficient of " + varPower(target, d) + modText);
  if (modular && expectedPure == 0) {
    rep.findings.push_back("pure power " + varPower(target, d) + " vanishes" + modText + " since (C(" +
                           std::to_string(d) + "," + std::to_string(i) + ")-1)^" + std::to_string(d - i) + " = " +
                           rep.expectedPurePowerCoeff.get_str() + " is divisible by the modulus");
  }

  // No other pure power; the expected one present exactly when nonzero.
  {
    bool ok = true;
    std::ostringstream found;
    for (const auto& pp : rep.purePowers) {
      found << (found.tellp() ? ", " : "") << varPower(pp.variable, pp.exponent);
      if (pp.variable != target || pp.exponent != d) ok = false;
    }
    bool present = std::any_of(rep.purePowers.begin(), rep.purePowers.end(),
                               [&](const PurePower& pp) { return pp.variable == target && pp.exponent == d; });
    if (present != (expectedPure != 0)) ok = false;
    std::string expectedSet = expectedPure != 0 ? "{" + varPower(target, d) + "}" : "{}";
    rep.claims["only-pure-powers"] = claim(ok, expectedSet, "{" + found.str() + "}");
  }

  // a_{d-i} divides R_i exactly.
  try {
    (void)divideByVariable(r, target);
    rep.claims["divisibility"] = claim(true, "a" + std::to_string(target) + " | R", "exact");
  } catch (const DomainError& e) {
    rep.claims["divisibility"] = claim(false, "a" + std::to_string(target) + " | R", "inexact", e.what());
  }

  // No monomial divisible by a_{d-i}^{d+1}.
  {
    unsigned maxExp = 0;
    for (const auto& [e, c] : r.terms()) maxExp = std::max(maxExp, e[target - 1]);
    rep.claims["degree-cap"] = claim(maxExp <= d, "max exponent of a" + std::to_string(target) + " <= " +
                                                      std::to_string(d),
                                     std::to_string(maxExp));
  }

  // Minimal-degree monomial a_{d-1}^{d-i} a_{d-i}.
  {
    const ExponentVector minExp = minDegreeExponents(d, i);
    const unsigned minDeg = d - i + 1;
    const mpz_class expectedMin = ring.normalize(expectedMinDegreeCoefficient(d, i));
    const mpz_class actualMin = coefficientOf(r, minExp);
    DegreeProfile prof = totalDegreeProfile(r);
    rep.minDegreeMonomials = prof.monomialsAtMin;

    bool unique = true;
    std::string detail;
    for (const auto& [e, c] : r.terms()) {
      if (e == minExp) continue;
      if (e.totalDegree() <= minDeg) {
        unique = false;
        detail = "other low-degree monomial " + monomialText(c, e);
        break;
      }
      // Only one monomial may be divisible by a_{d-1}^{d-i}.
      if (i >= 2 && e[d - 2] >= d - i) {
        unique = false;
        detail = "second monomial divisible by " + varPower(d - 1, d - i) + ": " + monomialText(c, e);
        break;
      }
    }
    if (!modular && actualMin == 0) {
      unique = false;
      detail = "expected minimal monomial absent";
    }
    std::string expectedText = "min degree " + std::to_string(minDeg) + " attained only by " +
                               monomialText(1, minExp);
    std::string actualText = "min degree " + std::to_string(prof.minDegree) + " with " +
                             std::to_string(prof.monomialsAtMin.size()) + " monomial(s)";
    rep.claims["min-degree-unique"] = claim(unique, expectedText, actualText, detail);
    rep.claims["min-degree-coefficient"] =
        claim(actualMin == expectedMin, expectedMin.get_str(), actualMin.get_str(),
              "coefficient of " + monomialText(1, minExp) + modText);
    if (modular && expectedMin == 0) {
      rep.findings.push_back("minimal-degree monomial " + monomialText(1, minExp) + " vanishes" + modText);
    }
  }

  // Subset enumeration reproduces the same coefficient.
  {
    mpz_class viaSubsets = coefficientViaSubsets(d, i);
    bool ok = viaSubsets == rep.expectedPurePowerCoeff && ring.normalize(viaSubsets) == actualPure;
    rep.claims["subset-oracle-agreement"] = claim(ok, viaSubsets.get_str(), actualPure.get_str(),
                                                  "J-subset sum vs closed form and R coefficient");
  }
  return rep;
}

TheoremReport checkTheorem(unsigned d, unsigned i) {
  requireRange(d, i);
  return checkTheorem(d, i, resultantRi(d, i));
}

TheoremReport checkProposition(unsigned d, unsigned i, const MultiPoly& r) {
  if (d < 3 || i < 2 || i > d - 1) {
    throw DomainError("minimal-degree check needs d >= 3 and 2 <= i <= d-1");
  }
  return checkTheorem(d, i, r);
}

TheoremReport checkProposition(unsigned d, unsigned i) {
  if (d < 3 || i < 2 || i > d - 1) {
    throw DomainError("minimal-degree check needs d >= 3 and 2 <= i <= d-1");
  }
  return checkTheorem(d, i, resultantRi(d, i));
}

std::vector<unsigned> JSubset::elements() const {
  std::vector<unsigned> out;
  for (unsigned b = 0; b < 32; ++b)
    if (members >> b & 1) out.push_back(b + 1);
  return out;
}

std::vector<JSubset> enumerateJSubsets(unsigned d, unsigned i) {
  requireRange(d, i);
  const unsigned m = d - i;
  if (m > 15) throw ResourceError("J-subset enumeration supports d - i <= 15");
  const std::uint32_t universe = (std::uint32_t(1) << (2 * m)) - 1;
  const std::uint32_t upper = universe & ~((std::uint32_t(1) << m) - 1);

  std::vector<JSubset> out;
  // Gosper's hack over all size-m subsets of a 2m-element set.
  std::uint32_t set = (std::uint32_t(1) << m) - 1;
  while (set <= universe) {
    if ((set & (set >> m)) == 0) {
      out.push_back({set, static_cast<unsigned>(std::popcount(~set & upper))});
    }
    std::uint32_t low = set & -set;
    std::uint32_t ripple = set + low;
    if (ripple == 0 || ripple > universe + 1) break;
    set = (((ripple ^ set) >> 2) / low) | ripple;
  }
  return out;
}

mpz_class coefficientViaSubsets(unsigned d, unsigned i) {
  const mpz_class c = binomial(d, i);
  mpz_class total = 0;
  for (const auto& j : enumerateJSubsets(d, i)) {
    mpz_class term = power(c, j.k);
    total += (j.k % 2) ? mpz_class(-term) : term;
  }
  return total;
}

}  // namespace ca

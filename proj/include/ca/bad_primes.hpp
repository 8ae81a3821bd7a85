#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ca {

struct IndexFactorization {
  unsigned i = 0;
  mpz_class value;  // C(d,i) - 1
  std::vector<std::pair<mpz_class, unsigned>> factorization;
  std::optional<mpz_class> unfactoredCofactor;
};

/// Primes p with p | C(d,i) - 1 for some 1 <= i <= d-1. Each such p makes
/// x^d + x^{d-i} a nontrivial Casas-Alvero polynomial over F_p.
struct BadPrimeReport {
  unsigned d = 0;
  std::vector<IndexFactorization> perIndex;  // i = 1 .. d-1
  std::vector<mpz_class> badPrimes;          // ascending, distinct
  bool complete = true;
};

BadPrimeReport badPrimes(unsigned d, std::uint64_t budget = 10'000'000);

/// What is known about one base degree. A degree listed in a table is taken
/// to satisfy the conjecture in characteristic 0.
struct GoodnessEntry {
  bool allGood = false;  // every prime is good (written `good=*`)
  std::set<mpz_class> good;
  std::set<mpz_class> bad;
  std::string provenance;
};

enum class PrimeStatus { Good, Bad, Unknown };

struct GoodnessTable {
  std::map<unsigned, GoodnessEntry> entries;

  PrimeStatus status(unsigned d, const mpz_class& p) const;

  /// Union of the two tables; throws StructuralError on a prime that ends up
  /// both good and bad.
  void merge(const GoodnessTable& other);
  void validate() const;
};

/// Base degrees 1..maxBase: degrees 1 and 2 are good for every prime
/// (vacuous, and R_1 = -a_1^2 respectively); degrees 3..maxBase carry only
/// the bad primes from C(d,i) - 1.
GoodnessTable defaultGoodnessTable(unsigned maxBase = 7);

// Line format, `#` starts a comment:
//   degree=<d> good=<p,p,...|*> bad=<p,p,...> source=<free text>
GoodnessTable parseGoodnessTable(const std::string& text);
std::string formatGoodnessTable(const GoodnessTable& table);

/// m = d * p^l with l >= 1 (or l = 0 and p = 0 when m is itself a base degree).
struct LadderWitness {
  unsigned d = 0;
  unsigned p = 0;
  unsigned l = 0;
};

struct Decomposition {
  unsigned d;
  unsigned p;
  unsigned l;
  PrimeStatus status;
};

struct CoverageReport {
  unsigned bound = 0;
  std::map<unsigned, LadderWitness> covered;
  /// Every decomposition uses a prime listed bad (or none exists).
  std::map<unsigned, std::vector<Decomposition>> blocked;
  /// Some decomposition uses a prime of unknown status.
  std::map<unsigned, std::vector<Decomposition>> undecided;
};

CoverageReport ladderCoverage(const GoodnessTable& table, unsigned bound);

std::string statusName(PrimeStatus s);

}  // namespace ca

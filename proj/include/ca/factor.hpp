#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ca {

/// Miller-Rabin with the first 13 prime bases (deterministic below
/// 3.3e24), plus seeded random bases above that bound.
bool isProbablePrime(const mpz_class& n);

struct Factorization {
  /// Prime factors with multiplicity, ascending.
  std::vector<std::pair<mpz_class, unsigned>> factors;
  /// 1 when fully factored; otherwise the composite part rho could not split.
  mpz_class cofactor = 1;

  bool complete() const { return cofactor == 1; }
};

/// Trial division to 10^6, then Pollard rho (Brent) for at most `budget`
/// iterations in total. Deterministic for a given input.
Factorization factorize(const mpz_class& n, std::uint64_t budget = 10'000'000);

}  // namespace ca

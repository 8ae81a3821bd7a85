#include "ca/factor.hpp"

#include <algorithm>
#include <map>

#include "ca/error.hpp"

namespace ca {

namespace {

constexpr unsigned kTrialLimit = 1'000'000;

const std::vector<unsigned>& smallPrimes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned> out;
    for (unsigned p = 2; p <= kTrialLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (unsigned long q = static_cast<unsigned long>(p) * p; q <= kTrialLimit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

bool millerRabinRound(const mpz_class& n, const mpz_class& base, const mpz_class& oddPart, unsigned twos) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), oddPart.get_mpz_t(), n.get_mpz_t());
  const mpz_class nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned r = 1; r < twos; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
mpz_class rho(const mpz_class& n, unsigned long c, std::uint64_t& budget) {
  mpz_class y = 2, x, q = 1, g = 1, ys;
  const unsigned long batch = 128;
  unsigned long r = 1;
  while (g == 1) {
    x = y;
    for (unsigned long k = 0; k < r; ++k) y = (y * y + c) % n;
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long steps = std::min(batch, r - k);
      for (unsigned long s = 0; s < steps; ++s) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      k += steps;
      if (budget <= steps) {
        budget = 0;
        return 0;
      }
      budget -= steps;
    }
    r *= 2;
  }
  if (g == n) {
    // Batch overshot; retrace one step at a time.
    do {
      ys = (ys * ys + c) % n;
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& primes, mpz_class& cofactor, std::uint64_t& budget) {
  if (n == 1) return;
  if (isProbablePrime(n)) {
    ++primes[n];
    return;
  }
  for (unsigned long c = 1; budget > 0; ++c) {
    mpz_class f = rho(n, c, budget);
    if (f != 0) {
      split(f, primes, cofactor, budget);
      split(n / f, primes, cofactor, budget);
      return;
    }
  }
  cofactor *= n;
}

}  // namespace

bool isProbablePrime(const mpz_class& n) {
  static const unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  mpz_class oddPart = n - 1;
  unsigned twos = 0;
  while (mpz_even_p(oddPart.get_mpz_t())) {
    oddPart /= 2;
    ++twos;
  }
  for (unsigned b : kBases)
    if (!millerRabinRound(n, b, oddPart, twos)) return false;

  static const mpz_class kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  for (int round = 0; round < 24; ++round) {
    mpz_class base = rng.get_z_range(n - 3) + 2;
    if (!millerRabinRound(n, base, oddPart, twos)) return false;
  }
  return true;
}

Factorization factorize(const mpz_class& n, std::uint64_t budget) {
  if (n < 2) throw DomainError("factorize needs n >= 2");
  std::map<mpz_class, unsigned> primes;
  mpz_class rest = n;
  for (unsigned p : smallPrimes()) {
    if (mpz_class(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++primes[p];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  Factorization out;
  split(rest, primes, out.cofactor, budget);
  for (auto& [p, e] : primes) out.factors.emplace_back(p, e);
  return out;
}

}  // namespace ca

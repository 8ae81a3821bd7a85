#include "ca/finite_field.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <gmpxx.h>

#include <omp.h>

#include "ca/error.hpp"
#include "ca/factor.hpp"
#include "ca/hasse.hpp"

namespace ca {

namespace {

using u64 = std::uint64_t;

u64 mulMod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powMod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulMod(r, a, p);
    a = mulMod(a, a, p);
    e >>= 1;
  }
  return r;
}

// p is prime, so a^{p-2} is the inverse of a nonzero residue.
u64 invMod(u64 a, u64 p) { return powMod(a, p - 2, p); }

void requirePrime(u64 p) {
  if (p < 2 || !isProbablePrime(mpz_class(static_cast<unsigned long>(p)))) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
  if (p > (u64(1) << 62)) throw DomainError("modulus too large for F_p arithmetic");
}

// u mod v with v nonzero.
std::vector<u64> remainder(std::vector<u64> u, const std::vector<u64>& v, u64 p) {
  const u64 inv = invMod(v.front(), p);
  while (u.size() >= v.size()) {
    u64 factor = mulMod(u.front(), inv, p);
    if (factor) {
      for (std::size_t k = 0; k < v.size(); ++k) u[k] = (u[k] + p - mulMod(factor, v[k], p)) % p;
    }
    u.erase(u.begin());
    while (!u.empty() && u.front() == 0) u.erase(u.begin());
  }
  return u;
}

}  // namespace

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2) throw DomainError("modulus must be >= 2");
  for (auto& c : coeffs_) c %= p;
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c != 0; });
  coeffs_.erase(coeffs_.begin(), first);
}

FpPoly FpPoly::monomial(u64 p, unsigned power, u64 coeff) {
  std::vector<u64> c(power + 1, 0);
  c[0] = coeff;
  return FpPoly(p, std::move(c));
}

std::string FpPoly::toString() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    u64 c = coeffs_[k];
    if (!c) continue;
    std::size_t power = coeffs_.size() - 1 - k;
    if (!first) os << " + ";
    if (c != 1 || power == 0) os << c;
    if (power > 0) os << "x";
    if (power > 1) os << "^" << power;
    first = false;
  }
  return os.str();
}

FpPoly gcdFp(const FpPoly& u, const FpPoly& v) {
  if (u.modulus() != v.modulus()) throw StructuralError("gcd of polynomials over different fields");
  if (u.isZero() && v.isZero()) throw DomainError("gcd of two zero polynomials");
  const u64 p = u.modulus();
  std::vector<u64> a = u.coeffs(), b = v.coeffs();
  while (!b.empty()) {
    std::vector<u64> r = remainder(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  const u64 inv = invMod(a.front(), p);
  for (auto& c : a) c = mulMod(c, inv, p);
  return FpPoly(p, std::move(a));
}

FpPoly hasseDerivativeFp(const FpPoly& f, unsigned i) {
  if (f.isZero() || static_cast<int>(i) > f.degree()) throw DomainError("Hasse derivative order out of range");
  std::vector<mpz_class> lifted;
  for (u64 c : f.coeffs()) lifted.emplace_back(static_cast<unsigned long>(c));
  UniPoly<mpz_class> h = hasseDerivative(UniPoly<mpz_class>(std::move(lifted)), i);
  std::vector<u64> reduced;
  const mpz_class p(static_cast<unsigned long>(f.modulus()));
  for (const auto& c : h.coeffs) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    reduced.push_back(r.get_ui());
  }
  return FpPoly(f.modulus(), std::move(reduced));
}

CAWitness isCasasAlvero(const FpPoly& f) {
  if (f.degree() < 2) throw DomainError("Casas-Alvero check needs degree >= 2");
  if (f.leading() != 1) throw DomainError("Casas-Alvero check needs a monic polynomial");
  if (f.constantTerm() != 0) throw DomainError("Casas-Alvero check needs zero constant term (a_d = 0)");

  CAWitness w;
  w.p = f.modulus();
  w.f = f;
  w.isCasasAlvero = true;
  const unsigned d = static_cast<unsigned>(f.degree());
  for (unsigned i = 1; i + 1 <= d; ++i) {
    FpPoly g = gcdFp(f, hasseDerivativeFp(f, i));
    if (g.degree() < 1) w.isCasasAlvero = false;
    w.perIndex.emplace_back(i, std::move(g));
  }
  w.isTrivial = f == FpPoly::monomial(f.modulus(), d);
  return w;
}

CAWitness corollaryWitness(unsigned d, unsigned i, u64 p) {
  if (d < 2 || i < 1 || i > d - 1) throw DomainError("need d >= 2 and 1 <= i <= d-1");
  requirePrime(p);
  mpz_class value = binomial(d, i) - 1;
  if (!mpz_divisible_ui_p(value.get_mpz_t(), p)) {
    throw DomainError(std::to_string(p) + " does not divide C(" + std::to_string(d) + "," + std::to_string(i) +
                      ") - 1 = " + value.get_str());
  }
  std::vector<u64> c(d + 1, 0);
  c[0] = 1;
  c[i] = 1;  // x^{d-i}
  return isCasasAlvero(FpPoly(p, std::move(c)));
}

namespace {

u64 candidateCount(unsigned d, u64 p, u64 cap) {
  if (d < 2) throw DomainError("search needs d >= 2");
  requirePrime(p);
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, d - 1);
  if (count > mpz_class(static_cast<unsigned long>(cap))) {
    throw ResourceError("search over F_" + std::to_string(p) + " in degree " + std::to_string(d) + " has " +
                        count.get_str() + " candidates; requires cap >= " + count.get_str());
  }
  return count.get_ui();
}

// Candidate index -> x^d + a_1 x^{d-1} + ... + a_{d-1} x, a_1 most significant.
FpPoly candidate(unsigned d, u64 p, u64 index) {
  std::vector<u64> c(d + 1, 0);
  c[0] = 1;
  for (unsigned j = d - 1; j >= 1; --j) {
    c[j] = index % p;
    index /= p;
  }
  return FpPoly(p, std::move(c));
}

bool byCoefficients(const CAWitness& a, const CAWitness& b) { return a.f.coeffs() < b.f.coeffs(); }

}  // namespace

std::vector<CAWitness> exhaustiveSearchSerial(unsigned d, u64 p, u64 cap) {
  const u64 count = candidateCount(d, p, cap);
  std::vector<CAWitness> out;
  for (u64 index = 0; index < count; ++index) {
    CAWitness w = isCasasAlvero(candidate(d, p, index));
    if (w.isCasasAlvero) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), byCoefficients);
  return out;
}

std::vector<CAWitness> exhaustiveSearch(unsigned d, u64 p, u64 cap) {
  const u64 count = candidateCount(d, p, cap);
  std::vector<std::vector<CAWitness>> perThread;
#pragma omp parallel
  {
#pragma omp single
    perThread.resize(omp_get_num_threads());
    std::vector<CAWitness>& mine = perThread[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::int64_t index = 0; index < static_cast<std::int64_t>(count); ++index) {
      CAWitness w = isCasasAlvero(candidate(d, p, static_cast<u64>(index)));
      if (w.isCasasAlvero) mine.push_back(std::move(w));
    }
  }
  std::vector<CAWitness> out;
  for (auto& chunk : perThread)
    for (auto& w : chunk) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), byCoefficients);
  return out;
}

std::vector<ScalingOrbit> groupScalingOrbits(const std::vector<CAWitness>& results) {
  std::map<std::vector<u64>, ScalingOrbit> orbits;
  for (const auto& w : results) {
    const u64 p = w.p;
    const std::vector<u64>& c = w.f.coeffs();
    const unsigned d = static_cast<unsigned>(w.f.degree());
    std::vector<u64> best;
    for (u64 lambda = 1; lambda < p; ++lambda) {
      u64 inv = invMod(lambda, p);
      std::vector<u64> image(d - 1);
      u64 scale = 1;
      for (unsigned j = 1; j < d; ++j) {
        scale = mulMod(scale, inv, p);
        image[j - 1] = mulMod(c[j], scale, p);
      }
      if (best.empty() || image < best) best = std::move(image);
    }
    auto& orbit = orbits[best];
    orbit.representative = best;
    orbit.members.push_back(w.f);
  }
  std::vector<ScalingOrbit> out;
  for (auto& [key, orbit] : orbits) out.push_back(std::move(orbit));
  return out;
}

}  // namespace ca

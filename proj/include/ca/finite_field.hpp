#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ca {

/// Polynomial over F_p in canonical form: residues in [0, p), descending
/// powers, no leading zeros (the zero polynomial has no coefficients).
class FpPoly {
 public:
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly monomial(std::uint64_t p, unsigned power, std::uint64_t coeff = 1);

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.front(); }
  std::uint64_t constantTerm() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  std::string toString() const;

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> coeffs_;
};

/// Monic gcd by the Euclidean algorithm. Throws DomainError if both are zero.
FpPoly gcdFp(const FpPoly& u, const FpPoly& v);

/// H_i(f) over F_p: binomials computed exactly, then reduced.
FpPoly hasseDerivativeFp(const FpPoly& f, unsigned i);

struct CAWitness {
  std::uint64_t p = 0;
  FpPoly f{2, {}};
  std::vector<std::pair<unsigned, FpPoly>> perIndex;  // (i, gcd(f, H_i(f)))
  bool isCasasAlvero = false;
  bool isTrivial = false;  // f = x^d
};

/// f must be monic of degree >= 2 with zero constant term.
CAWitness isCasasAlvero(const FpPoly& f);

/// x^d + x^{d-i} over F_p; requires p prime with p | C(d,i) - 1.
CAWitness corollaryWitness(unsigned d, unsigned i, std::uint64_t p);

inline constexpr std::uint64_t kDefaultSearchCap = 10'000'000;

/// Every Casas-Alvero polynomial x^d + a_1 x^{d-1} + ... + a_{d-1} x over
/// F_p, sorted by (a_1, ..., a_{d-1}). Candidates are split across OpenMP
/// threads in contiguous blocks.
std::vector<CAWitness> exhaustiveSearch(unsigned d, std::uint64_t p, std::uint64_t cap = kDefaultSearchCap);
/// Single-threaded reference for exhaustiveSearch.
std::vector<CAWitness> exhaustiveSearchSerial(unsigned d, std::uint64_t p, std::uint64_t cap = kDefaultSearchCap);

/// Groups search results under x -> lambda x (a_j -> lambda^{-j} a_j).
struct ScalingOrbit {
  std::vector<std::uint64_t> representative;  // lexicographically smallest (a_1..a_{d-1})
  std::vector<FpPoly> members;
};
std::vector<ScalingOrbit> groupScalingOrbits(const std::vector<CAWitness>& results);

}  // namespace ca

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ca/error.hpp"
#include "ca/multipoly.hpp"

namespace ca {

/// C(n, k); zero when k < 0 or k > n.
mpz_class binomial(long n, long k);
mpz_class factorial(unsigned n);

// Coefficient-ring hooks used by UniPoly. Integer coefficients serve the
// specialized (numeric) polynomials, MultiPoly the symbolic ones.
inline mpz_class scale(const mpz_class& c, const mpz_class& factor) { return c * factor; }
inline bool isZero(const mpz_class& c) { return c == 0; }

/// Univariate polynomial in x with coefficients indexed by descending power:
/// coeffs[0] multiplies x^formalDegree. The formal degree is kept even when
/// the leading coefficient is zero.
template <typename Coeff>
struct UniPoly {
  std::vector<Coeff> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<Coeff> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw StructuralError("UniPoly needs at least one coefficient slot");
  }

  unsigned formalDegree() const { return static_cast<unsigned>(coeffs.size()) - 1; }

  /// Coefficient of x^power.
  const Coeff& coeffOfPower(unsigned power) const { return coeffs[formalDegree() - power]; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs == b.coeffs; }
};

/// x^d + a_1 x^{d-1} + ... + a_{d-1} x, over Z[a_1, ..., a_{d-1}].
struct GenericCAPoly {
  unsigned d;
  UniPoly<MultiPoly> body;
};

GenericCAPoly buildGeneric(unsigned d, const Ring& ring = Ring::integers());

/// i-th Hasse derivative: the coefficient of x^{n-i-j} is C(n-j, i) times
/// the coefficient of x^{n-j}, where n is the formal degree. The result has
/// formal degree n - i.
template <typename Coeff>
UniPoly<Coeff> hasseDerivative(const UniPoly<Coeff>& f, long i) {
  const long n = f.formalDegree();
  if (i < 0 || i > n) throw DomainError("Hasse derivative order out of range");
  std::vector<Coeff> out;
  out.reserve(n - i + 1);
  for (long j = 0; j <= n - i; ++j) out.push_back(scale(f.coeffs[j], binomial(n - j, i)));
  return UniPoly<Coeff>(std::move(out));
}

/// i-fold formal derivative f^{(i)}.
template <typename Coeff>
UniPoly<Coeff> ordinaryDerivative(const UniPoly<Coeff>& f, long i) {
  const long n = f.formalDegree();
  if (i < 0 || i > n) throw DomainError("derivative order out of range");
  std::vector<Coeff> out;
  out.reserve(n - i + 1);
  for (long j = 0; j <= n - i; ++j) {
    // d^i/dx^i x^m = m (m-1) ... (m-i+1) x^{m-i}
    mpz_class falling = 1;
    for (long t = 0; t < i; ++t) falling *= (n - j - t);
    out.push_back(scale(f.coeffs[j], falling));
  }
  return UniPoly<Coeff>(std::move(out));
}

template <typename Coeff>
UniPoly<Coeff> scalePoly(const UniPoly<Coeff>& f, const mpz_class& factor) {
  std::vector<Coeff> out;
  out.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) out.push_back(scale(c, factor));
  return UniPoly<Coeff>(std::move(out));
}

/// Substitutes a numeric point for a_1, ..., a_{d-1}.
UniPoly<mpz_class> specializePoly(const UniPoly<MultiPoly>& f, const std::vector<mpz_class>& point);

std::string formatUniPoly(const UniPoly<MultiPoly>& f);
std::string formatUniPoly(const UniPoly<mpz_class>& f);

}  // namespace ca

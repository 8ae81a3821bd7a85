#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ca {

/// Exponent vector of a monomial in a_1, ..., a_n. Stored inline with a
/// fixed capacity so monomials hash and compare without allocation.
class ExponentVector {
 public:
  static constexpr unsigned kMaxVars = 16;
  static constexpr unsigned kMaxExponent = 255;

  ExponentVector() = default;
  explicit ExponentVector(unsigned size);
  ExponentVector(std::initializer_list<unsigned> exps);
  explicit ExponentVector(const std::vector<unsigned>& exps);

  /// The vector with a single 1 at (1-based) variable index `var`.
  static ExponentVector unit(unsigned size, unsigned var, unsigned power = 1);

  unsigned size() const { return size_; }
  unsigned operator[](unsigned pos) const { return exps_[pos]; }
  void set(unsigned pos, unsigned value);
  unsigned totalDegree() const;
  bool isZero() const { return totalDegree() == 0; }

  /// Componentwise sum; throws std::overflow_error past kMaxExponent.
  ExponentVector operator+(const ExponentVector& other) const;
  bool divides(const ExponentVector& other) const;
  ExponentVector operator-(const ExponentVector& other) const;

  std::vector<unsigned> toVector() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.size_ == b.size_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint8_t size_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& e) const { return e.hash(); }
};

/// Graded lexicographic comparison: total degree first, then the first
/// differing exponent. Returns true when a ranks strictly above b.
bool grlexGreater(const ExponentVector& a, const ExponentVector& b);

struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return grlexGreater(a, b);
  }
};

/// Coefficient ring: the integers, or the integers modulo a positive modulus.
class Ring {
 public:
  static Ring integers() { return Ring(); }
  static Ring modulo(const mpz_class& modulus);

  bool isIntegers() const { return modulus_ == 0; }
  const mpz_class& modulus() const { return modulus_; }

  /// Canonical representative: identity over Z, residue in [0, m) otherwise.
  mpz_class normalize(const mpz_class& value) const;

  /// "Z" or "F<p>", as used in the CA-POLY header.
  std::string tag() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.modulus_ == b.modulus_; }

 private:
  Ring() = default;
  mpz_class modulus_ = 0;
};

struct Monomial {
  mpz_class coefficient;
  ExponentVector exponents;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coefficient == b.coefficient && a.exponents == b.exponents;
  }
};

/// Sparse multivariate polynomial with exact coefficients.
///
/// The term map never holds a zero coefficient, so two polynomials are equal
/// exactly when their term maps are. Values are treated as immutable once
/// built; `accumulate` exists for operation-local accumulators.
class MultiPoly {
 public:
  using TermMap = std::unordered_map<ExponentVector, mpz_class, ExponentHash>;

  MultiPoly(Ring ring, unsigned varCount);

  static MultiPoly constant(Ring ring, unsigned varCount, const mpz_class& value);
  /// a_var, 1-based.
  static MultiPoly variable(Ring ring, unsigned varCount, unsigned var);
  static MultiPoly monomial(Ring ring, const mpz_class& coefficient, const ExponentVector& exps);
  static MultiPoly fromTerms(Ring ring, unsigned varCount, const std::vector<Monomial>& terms);

  const Ring& ring() const { return ring_; }
  unsigned varCount() const { return varCount_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// True when the polynomial is a single term (used to take the cheap
  /// product path in determinant kernels).
  bool isMonomial() const { return terms_.size() == 1; }
  Monomial soleTerm() const;

  /// Terms in descending graded lexicographic order (leading term first).
  std::vector<Monomial> sortedTerms() const;

  /// Adds `coefficient * a^exps` in place, dropping the term if it cancels.
  void accumulate(const ExponentVector& exps, const mpz_class& coefficient);
  /// Adds `coefficient * m * other` in place.
  void accumulateProduct(const MultiPoly& other, const mpz_class& coefficient,
                         const ExponentVector& shift);

  std::string toString() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void checkKey(const ExponentVector& exps) const;

  Ring ring_;
  unsigned varCount_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly neg(const MultiPoly& p);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly scale(const MultiPoly& p, const mpz_class& factor);
bool isZero(const MultiPoly& p);

inline MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) { return add(p, q); }
inline MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return sub(p, q); }
inline MultiPoly operator-(const MultiPoly& p) { return neg(p); }
inline MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) { return mul(p, q); }

mpz_class coefficientOf(const MultiPoly& p, const ExponentVector& exps);

/// Reduces every coefficient into [0, prime) and moves p into Z/prime.
MultiPoly reduceMod(const MultiPoly& p, const mpz_class& prime);

/// Exact evaluation at `point` (length varCount). Over Z/m the result is a
/// residue.
mpz_class specialize(const MultiPoly& p, const std::vector<mpz_class>& point);

struct DegreeProfile {
  unsigned minDegree;
  unsigned maxDegree;
  std::vector<Monomial> monomialsAtMin;  // grlex-descending
};

DegreeProfile totalDegreeProfile(const MultiPoly& p);

/// p / a_var, requiring every term to be divisible. Throws DomainError
/// otherwise.
MultiPoly divideByVariable(const MultiPoly& p, unsigned var);

/// Exact quotient p / q by leading-term elimination under grlex. Throws
/// DomainError when q does not divide p.
MultiPoly divideExact(const MultiPoly& p, const MultiPoly& q);

}  // namespace ca

#include "ca/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ca/error.hpp"

namespace ca {

// ExponentVector -------------------------------------------------------------

ExponentVector::ExponentVector(unsigned size) {
  if (size > kMaxVars) {
    throw StructuralError("exponent vector longer than " + std::to_string(kMaxVars));
  }
  size_ = static_cast<std::uint8_t>(size);
}

ExponentVector::ExponentVector(std::initializer_list<unsigned> exps)
    : ExponentVector(static_cast<unsigned>(exps.size())) {
  unsigned pos = 0;
  for (unsigned e : exps) set(pos++, e);
}

ExponentVector::ExponentVector(const std::vector<unsigned>& exps)
    : ExponentVector(static_cast<unsigned>(exps.size())) {
  for (unsigned pos = 0; pos < exps.size(); ++pos) set(pos, exps[pos]);
}

ExponentVector ExponentVector::unit(unsigned size, unsigned var, unsigned power) {
  if (var < 1 || var > size) throw StructuralError("variable index out of range");
  ExponentVector e(size);
  e.set(var - 1, power);
  return e;
}

void ExponentVector::set(unsigned pos, unsigned value) {
  if (pos >= size_) throw StructuralError("exponent position out of range");
  if (value > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
  exps_[pos] = static_cast<std::uint8_t>(value);
}

unsigned ExponentVector::totalDegree() const {
  unsigned total = 0;
  for (unsigned k = 0; k < size_; ++k) total += exps_[k];
  return total;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (size_ != other.size_) throw StructuralError("exponent vector length mismatch");
  ExponentVector out(size_);
  for (unsigned k = 0; k < size_; ++k) {
    unsigned s = unsigned(exps_[k]) + other.exps_[k];
    if (s > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
    out.exps_[k] = static_cast<std::uint8_t>(s);
  }
  return out;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  if (size_ != other.size_) return false;
  for (unsigned k = 0; k < size_; ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  if (!other.divides(*this)) throw DomainError("exponent subtraction would go negative");
  ExponentVector out(size_);
  for (unsigned k = 0; k < size_; ++k) out.exps_[k] = exps_[k] - other.exps_[k];
  return out;
}

std::vector<unsigned> ExponentVector::toVector() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + size_);
}

std::size_t ExponentVector::hash() const {
  // FNV-1a over the used bytes.
  std::size_t h = 1469598103934665603ull;
  for (unsigned k = 0; k < size_; ++k) {
    h ^= exps_[k];
    h *= 1099511628211ull;
  }
  return h ^ size_;
}

bool grlexGreater(const ExponentVector& a, const ExponentVector& b) {
  unsigned da = a.totalDegree(), db = b.totalDegree();
  if (da != db) return da > db;
  for (unsigned k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] > b[k];
  return false;
}

// Ring -----------------------------------------------------------------------

Ring Ring::modulo(const mpz_class& modulus) {
  if (modulus <= 0) throw StructuralError("modulus must be positive");
  Ring r;
  r.modulus_ = modulus;
  return r;
}

mpz_class Ring::normalize(const mpz_class& value) const {
  if (isIntegers()) return value;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

std::string Ring::tag() const {
  return isIntegers() ? std::string("Z") : "F" + modulus_.get_str();
}

// MultiPoly ------------------------------------------------------------------

MultiPoly::MultiPoly(Ring ring, unsigned varCount) : ring_(std::move(ring)), varCount_(varCount) {
  if (varCount > ExponentVector::kMaxVars) {
    throw StructuralError("at most " + std::to_string(ExponentVector::kMaxVars) + " variables");
  }
}

MultiPoly MultiPoly::constant(Ring ring, unsigned varCount, const mpz_class& value) {
  MultiPoly p(std::move(ring), varCount);
  p.accumulate(ExponentVector(varCount), value);
  return p;
}

MultiPoly MultiPoly::variable(Ring ring, unsigned varCount, unsigned var) {
  MultiPoly p(std::move(ring), varCount);
  p.accumulate(ExponentVector::unit(varCount, var), 1);
  return p;
}

MultiPoly MultiPoly::monomial(Ring ring, const mpz_class& coefficient, const ExponentVector& exps) {
  MultiPoly p(std::move(ring), exps.size());
  p.accumulate(exps, coefficient);
  return p;
}

MultiPoly MultiPoly::fromTerms(Ring ring, unsigned varCount, const std::vector<Monomial>& terms) {
  MultiPoly p(std::move(ring), varCount);
  for (const auto& t : terms) p.accumulate(t.exponents, t.coefficient);
  return p;
}

Monomial MultiPoly::soleTerm() const {
  if (terms_.size() != 1) throw DomainError("polynomial is not a single term");
  const auto& [e, c] = *terms_.begin();
  return {c, e};
}

std::vector<Monomial> MultiPoly::sortedTerms() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({c, e});
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grlexGreater(a.exponents, b.exponents); });
  return out;
}

void MultiPoly::checkKey(const ExponentVector& exps) const {
  if (exps.size() != varCount_) throw StructuralError("exponent vector length does not match varCount");
}

void MultiPoly::accumulate(const ExponentVector& exps, const mpz_class& coefficient) {
  checkKey(exps);
  mpz_class c = ring_.normalize(coefficient);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second = ring_.normalize(it->second + c);
  if (it->second == 0) terms_.erase(it);
}

void MultiPoly::accumulateProduct(const MultiPoly& other, const mpz_class& coefficient,
                                  const ExponentVector& shift) {
  if (!(other.ring_ == ring_) || other.varCount_ != varCount_) {
    throw StructuralError("ring or varCount mismatch");
  }
  checkKey(shift);
  if (coefficient == 0) return;
  mpz_class prod;
  for (const auto& [e, c] : other.terms_) {
    prod = c * coefficient;
    if (!ring_.isIntegers()) prod = ring_.normalize(prod);
    if (prod == 0) continue;
    ExponentVector key = e + shift;
    auto [it, inserted] = terms_.try_emplace(key, prod);
    if (inserted) continue;
    it->second += prod;
    if (!ring_.isIntegers()) it->second = ring_.normalize(it->second);
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void requireCompatible(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.ring() == q.ring())) throw StructuralError("ring mismatch");
  if (p.varCount() != q.varCount()) throw StructuralError("varCount mismatch");
}

void appendMonomial(std::ostringstream& os, const mpz_class& c, const ExponentVector& e, bool first) {
  mpz_class mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool constant = e.isZero();
  if (mag != 1 || constant) {
    os << mag.get_str();
    if (!constant) os << "*";
  }
  bool firstVar = true;
  for (unsigned k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!firstVar) os << "*";
    os << "a" << (k + 1);
    if (e[k] > 1) os << "^" << e[k];
    firstVar = false;
  }
}

}  // namespace

std::string MultiPoly::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : sortedTerms()) {
    appendMonomial(os, t.coefficient, t.exponents, first);
    first = false;
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.ring_ == b.ring_ && a.varCount_ == b.varCount_ && a.terms_ == b.terms_;
}

MultiPoly add(const MultiPoly& p, const MultiPoly& q) {
  requireCompatible(p, q);
  MultiPoly out = p.termCount() >= q.termCount() ? p : q;
  const MultiPoly& other = p.termCount() >= q.termCount() ? q : p;
  for (const auto& [e, c] : other.terms()) out.accumulate(e, c);
  return out;
}

MultiPoly neg(const MultiPoly& p) {
  MultiPoly out(p.ring(), p.varCount());
  for (const auto& [e, c] : p.terms()) out.accumulate(e, -c);
  return out;
}

MultiPoly sub(const MultiPoly& p, const MultiPoly& q) {
  requireCompatible(p, q);
  MultiPoly out = p;
  for (const auto& [e, c] : q.terms()) out.accumulate(e, -c);
  return out;
}

MultiPoly mul(const MultiPoly& p, const MultiPoly& q) {
  requireCompatible(p, q);
  const MultiPoly& big = p.termCount() >= q.termCount() ? p : q;
  const MultiPoly& small = p.termCount() >= q.termCount() ? q : p;
  MultiPoly out(p.ring(), p.varCount());
  for (const auto& [e, c] : small.terms()) out.accumulateProduct(big, c, e);
  return out;
}

MultiPoly scale(const MultiPoly& p, const mpz_class& factor) {
  MultiPoly out(p.ring(), p.varCount());
  out.accumulateProduct(p, factor, ExponentVector(p.varCount()));
  return out;
}

bool isZero(const MultiPoly& p) { return p.isZero(); }

mpz_class coefficientOf(const MultiPoly& p, const ExponentVector& exps) {
  if (exps.size() != p.varCount()) throw StructuralError("exponent vector length does not match varCount");
  auto it = p.terms().find(exps);
  return it == p.terms().end() ? mpz_class(0) : it->second;
}

MultiPoly reduceMod(const MultiPoly& p, const mpz_class& prime) {
  if (prime <= 0) throw StructuralError("modulus must be positive");
  if (!p.ring().isIntegers() && p.ring().modulus() != prime) {
    // Z/m -> Z/q is only well defined when q | m.
    if (!mpz_divisible_p(p.ring().modulus().get_mpz_t(), prime.get_mpz_t())) {
      throw StructuralError("cannot reduce Z/" + p.ring().modulus().get_str() + " modulo " +
                            prime.get_str());
    }
  }
  MultiPoly out(Ring::modulo(prime), p.varCount());
  for (const auto& [e, c] : p.terms()) out.accumulate(e, c);
  return out;
}

mpz_class specialize(const MultiPoly& p, const std::vector<mpz_class>& point) {
  if (point.size() != p.varCount()) throw StructuralError("point length does not match varCount");
  // Power tables keep this linear in the number of terms.
  std::vector<std::vector<mpz_class>> powers(p.varCount());
  unsigned maxExp = 0;
  for (const auto& [e, c] : p.terms())
    for (unsigned k = 0; k < e.size(); ++k) maxExp = std::max(maxExp, e[k]);
  for (unsigned k = 0; k < p.varCount(); ++k) {
    powers[k].resize(maxExp + 1);
    powers[k][0] = 1;
    for (unsigned j = 1; j <= maxExp; ++j) powers[k][j] = powers[k][j - 1] * point[k];
  }
  mpz_class total = 0;
  mpz_class term;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (unsigned k = 0; k < e.size(); ++k)
      if (e[k]) term *= powers[k][e[k]];
    total += term;
  }
  return p.ring().normalize(total);
}

DegreeProfile totalDegreeProfile(const MultiPoly& p) {
  if (p.isZero()) throw DomainError("degree profile of the zero polynomial is undefined");
  DegreeProfile prof{~0u, 0, {}};
  for (const auto& [e, c] : p.terms()) {
    unsigned deg = e.totalDegree();
    prof.maxDegree = std::max(prof.maxDegree, deg);
    if (deg < prof.minDegree) {
      prof.minDegree = deg;
      prof.monomialsAtMin.clear();
    }
    if (deg == prof.minDegree) prof.monomialsAtMin.push_back({c, e});
  }
  std::sort(prof.monomialsAtMin.begin(), prof.monomialsAtMin.end(),
            [](const Monomial& a, const Monomial& b) { return grlexGreater(a.exponents, b.exponents); });
  return prof;
}

MultiPoly divideByVariable(const MultiPoly& p, unsigned var) {
  if (var < 1 || var > p.varCount()) throw StructuralError("variable index out of range");
  ExponentVector unit = ExponentVector::unit(p.varCount(), var);
  MultiPoly out(p.ring(), p.varCount());
  for (const auto& [e, c] : p.terms()) {
    if (e[var - 1] == 0) {
      throw DomainError("a" + std::to_string(var) + " does not divide every term");
    }
    out.accumulate(e - unit, c);
  }
  return out;
}

MultiPoly divideExact(const MultiPoly& p, const MultiPoly& q) {
  requireCompatible(p, q);
  if (q.isZero()) throw DomainError("division by the zero polynomial");
  const Ring& ring = p.ring();

  std::vector<Monomial> divisor = q.sortedTerms();
  const Monomial lead = divisor.front();
  mpz_class leadInverse;
  if (!ring.isIntegers()) {
    if (mpz_invert(leadInverse.get_mpz_t(), lead.coefficient.get_mpz_t(), ring.modulus().get_mpz_t()) == 0) {
      throw DomainError("leading coefficient of divisor is not invertible");
    }
  }

  std::map<ExponentVector, mpz_class, GrlexGreater> rem;
  for (const auto& [e, c] : p.terms()) rem.emplace(e, c);

  MultiPoly quotient(ring, p.varCount());
  mpz_class qc;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.exponents.divides(top->first)) throw DomainError("inexact polynomial division");
    if (ring.isIntegers()) {
      if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coefficient.get_mpz_t())) {
        throw DomainError("inexact polynomial division");
      }
      mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead.coefficient.get_mpz_t());
    } else {
      qc = ring.normalize(top->second * leadInverse);
    }
    ExponentVector qe = top->first - lead.exponents;
    quotient.accumulate(qe, qc);
    rem.erase(top);
    for (std::size_t k = 1; k < divisor.size(); ++k) {
      ExponentVector key = divisor[k].exponents + qe;
      mpz_class delta = ring.normalize(-qc * divisor[k].coefficient);
      if (delta == 0) continue;
      auto [it, inserted] = rem.try_emplace(key, delta);
      if (inserted) continue;
      it->second = ring.normalize(it->second + delta);
      if (it->second == 0) rem.erase(it);
    }
  }
  return quotient;
}

}  // namespace ca

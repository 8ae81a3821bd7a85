#include "ca/sylvester.hpp"

#include <string>

#include "ca/error.hpp"

namespace ca {

PolyMatrix::PolyMatrix(std::size_t n, Ring ring, unsigned varCount)
    : n_(n), ring_(std::move(ring)), varCount_(varCount), entries_(n * n, MultiPoly(ring_, varCount)) {}

void PolyMatrix::set(std::size_t row, std::size_t col, MultiPoly value) {
  if (row >= n_ || col >= n_) throw StructuralError("matrix index out of range");
  if (!(value.ring() == ring_) || value.varCount() != varCount_) {
    throw StructuralError("matrix entry ring or varCount mismatch");
  }
  entries_[row * n_ + col] = std::move(value);
}

PolyMatrix PolyMatrix::identity(std::size_t n, Ring ring, unsigned varCount) {
  PolyMatrix m(n, ring, varCount);
  for (std::size_t k = 0; k < n; ++k) m.set(k, k, MultiPoly::constant(ring, varCount, 1));
  return m;
}

PolyMatrix sylvesterMatrix(const UniPoly<MultiPoly>& f, const UniPoly<MultiPoly>& g) {
  const unsigned d = f.formalDegree();
  const unsigned e = g.formalDegree();
  if (d < 1 || e < 1) throw DomainError("Sylvester matrix needs formal degrees >= 1");
  const Ring& ring = f.coeffs.front().ring();
  const unsigned vars = f.coeffs.front().varCount();
  PolyMatrix m(d + e, ring, vars);
  for (unsigned r = 0; r < e; ++r)
    for (unsigned j = 0; j <= d; ++j) m.set(r, r + j, f.coeffs[j]);
  for (unsigned r = 0; r < d; ++r)
    for (unsigned j = 0; j <= e; ++j) m.set(e + r, r + j, g.coeffs[j]);
  return m;
}

PolyMatrix caMatrix(unsigned d, unsigned i, const Ring& ring) {
  if (d < 2 || i < 1 || i > d - 1) {
    throw DomainError("M(d,i) needs d >= 2 and 1 <= i <= d-1 (got d=" + std::to_string(d) +
                      ", i=" + std::to_string(i) + ")");
  }
  GenericCAPoly f = buildGeneric(d, ring);
  return sylvesterMatrix(f.body, hasseDerivative(f.body, i));
}

MultiPoly resultantRi(unsigned d, unsigned i, const Ring& ring) {
  return determinant(caMatrix(d, i, ring));
}

const MultiPoly& ResultantStore::get(unsigned d, unsigned i, const Ring& ring) {
  auto key = std::make_tuple(d, i, ring.tag());
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  MultiPoly value = resultantRi(d, i, ring);
  std::lock_guard lock(mutex_);
  // Concurrent producers compute identical values; the first insert wins.
  return cache_.try_emplace(key, std::move(value)).first->second;
}

}  // namespace ca

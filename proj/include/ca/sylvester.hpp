#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "ca/hasse.hpp"
#include "ca/multipoly.hpp"

namespace ca {

/// Square matrix of MultiPoly entries sharing one ring and variable count.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t n, Ring ring, unsigned varCount);

  std::size_t size() const { return n_; }
  const Ring& ring() const { return ring_; }
  unsigned varCount() const { return varCount_; }

  const MultiPoly& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  void set(std::size_t row, std::size_t col, MultiPoly value);

  static PolyMatrix identity(std::size_t n, Ring ring, unsigned varCount);

 private:
  std::size_t n_;
  Ring ring_;
  unsigned varCount_;
  std::vector<MultiPoly> entries_;
};

/// Sylvester matrix of f (formal degree d) and g (formal degree e): e rows
/// of f's coefficients followed by d rows of g's, each shifted one column
/// right per row.
PolyMatrix sylvesterMatrix(const UniPoly<MultiPoly>& f, const UniPoly<MultiPoly>& g);

/// The matrix M(d, i) of f and its i-th Hasse derivative.
PolyMatrix caMatrix(unsigned d, unsigned i, const Ring& ring = Ring::integers());

// Determinant kernels. All three are exact and must agree.
//
// The expansion kernels run column by column, memoizing the partial sums
// over permutation prefixes keyed on the set of rows already used. The
// OpenMP kernel pulls each next-level state from its predecessors in
// parallel; the serial kernel pushes contributions forward one state at a
// time and is kept as the reference.

/// Default: memoized expansion, OpenMP-parallel over states of a level.
MultiPoly determinant(const PolyMatrix& m);
/// Reference: the same expansion, single-threaded push form.
MultiPoly determinantSerial(const PolyMatrix& m);
/// Cross-check: fraction-free (Bareiss) elimination with exact division.
MultiPoly determinantBareiss(const PolyMatrix& m);

/// R_i = det M(d, i) over the requested ring (computed directly in Z/p when
/// a modulus is given; H_i keeps formal degree d - i either way).
MultiPoly resultantRi(unsigned d, unsigned i, const Ring& ring = Ring::integers());

/// Resultant of integer polynomials by the subresultant PRS. Independent
/// of any matrix determinant; used as the oracle for specializations.
/// Requires deg f >= deg g and nonzero actual leading coefficients.
mpz_class subresultantResultant(const UniPoly<mpz_class>& f, const UniPoly<mpz_class>& g);

/// Thread-safe in-memory store of computed R_i keyed on (d, i, ring).
class ResultantStore {
 public:
  const MultiPoly& get(unsigned d, unsigned i, const Ring& ring = Ring::integers());

 private:
  std::mutex mutex_;
  std::map<std::tuple<unsigned, unsigned, std::string>, MultiPoly> cache_;
};

}  // namespace ca

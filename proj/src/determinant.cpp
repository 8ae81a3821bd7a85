#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <omp.h>

#include "ca/error.hpp"
#include "ca/sylvester.hpp"

namespace ca {

namespace {

using RowSet = std::uint64_t;
using Level = std::vector<std::pair<RowSet, MultiPoly>>;

// Sparsity pattern shared by both expansion kernels.
struct Pattern {
  std::size_t n = 0;
  std::vector<std::vector<unsigned>> rowsInColumn;  // nonzero rows per column
  std::vector<int> lastColumn;                      // -1 for an all-zero row

  explicit Pattern(const PolyMatrix& m) : n(m.size()), rowsInColumn(n), lastColumn(n, -1) {
    if (n > 64) throw ResourceError("memoized expansion supports at most 64 rows");
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        if (!m.at(r, c).isZero()) {
          rowsInColumn[c].push_back(static_cast<unsigned>(r));
          lastColumn[r] = static_cast<int>(c);
        }
  }

  bool hasZeroRow() const {
    return std::any_of(lastColumn.begin(), lastColumn.end(), [](int c) { return c < 0; });
  }

  // After `done` columns, every unused row must still have a nonzero entry
  // in a remaining column.
  bool alive(RowSet used, std::size_t done) const {
    for (std::size_t r = 0; r < n; ++r)
      if (!(used >> r & 1) && lastColumn[r] < static_cast<int>(done)) return false;
    return true;
  }
};

// Inversions added when row r is assigned after the rows in `used`.
inline bool oddInversions(RowSet used, unsigned row) {
  RowSet above = row >= 63 ? 0 : used & ~((RowSet(2) << row) - 1);
  return std::popcount(above) & 1;
}

void accumulateEntry(MultiPoly& acc, const MultiPoly& prefix, const MultiPoly& entry, bool negate) {
  for (const auto& [e, c] : entry.terms()) acc.accumulateProduct(prefix, negate ? mpz_class(-c) : c, e);
}

MultiPoly finish(const Level& level, const PolyMatrix& m) {
  RowSet full = m.size() == 64 ? ~RowSet(0) : (RowSet(1) << m.size()) - 1;
  for (const auto& [set, poly] : level)
    if (set == full) return poly;
  return MultiPoly(m.ring(), m.varCount());
}

}  // namespace

MultiPoly determinantSerial(const PolyMatrix& m) {
  if (m.size() == 0) throw DomainError("determinant of an empty matrix");
  Pattern pat(m);
  if (pat.hasZeroRow()) return MultiPoly(m.ring(), m.varCount());

  Level level;
  level.emplace_back(0, MultiPoly::constant(m.ring(), m.varCount(), 1));
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::map<RowSet, MultiPoly> next;
    for (const auto& [used, prefix] : level) {
      for (unsigned r : pat.rowsInColumn[c]) {
        if (used >> r & 1) continue;
        RowSet target = used | RowSet(1) << r;
        if (!pat.alive(target, c + 1)) continue;
        auto it = next.try_emplace(target, m.ring(), m.varCount()).first;
        accumulateEntry(it->second, prefix, m.at(r, c), oddInversions(used, r));
      }
    }
    level.clear();
    for (auto& [set, poly] : next)
      if (!poly.isZero()) level.emplace_back(set, std::move(poly));
  }
  return finish(level, m);
}

MultiPoly determinant(const PolyMatrix& m) {
  if (m.size() == 0) throw DomainError("determinant of an empty matrix");
  Pattern pat(m);
  if (pat.hasZeroRow()) return MultiPoly(m.ring(), m.varCount());

  Level level;
  level.emplace_back(0, MultiPoly::constant(m.ring(), m.varCount(), 1));
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::vector<RowSet> targets;
    for (const auto& entry : level) {
      RowSet used = entry.first;
      for (unsigned r : pat.rowsInColumn[c]) {
        if (used >> r & 1) continue;
        RowSet target = used | RowSet(1) << r;
        if (pat.alive(target, c + 1)) targets.push_back(target);
      }
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    std::vector<MultiPoly> sums(targets.size(), MultiPoly(m.ring(), m.varCount()));
    const auto count = static_cast<std::int64_t>(targets.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t t = 0; t < count; ++t) {
      RowSet target = targets[t];
      for (unsigned r : pat.rowsInColumn[c]) {
        if (!(target >> r & 1)) continue;
        RowSet used = target ^ RowSet(1) << r;
        auto it = std::lower_bound(level.begin(), level.end(), used,
                                   [](const auto& e, RowSet key) { return e.first < key; });
        if (it == level.end() || it->first != used) continue;
        accumulateEntry(sums[t], it->second, m.at(r, c), oddInversions(used, r));
      }
    }

    Level next;
    next.reserve(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (!sums[t].isZero()) next.emplace_back(targets[t], std::move(sums[t]));
    level = std::move(next);
  }
  return finish(level, m);
}

MultiPoly determinantBareiss(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  std::vector<std::vector<MultiPoly>> a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r].push_back(m.at(r, c));

  const MultiPoly one = MultiPoly::constant(m.ring(), m.varCount(), 1);
  MultiPoly previous = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Smallest nonzero pivot keeps the exact divisions cheap.
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r)
      if (!a[r][k].isZero() && (pivot == n || a[r][k].termCount() < a[pivot][k].termCount())) pivot = r;
    if (pivot == n) return MultiPoly(m.ring(), m.varCount());
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }

    const MultiPoly& p = a[k][k];
    const bool pivotIsPrevious = p == previous;
    const bool previousIsOne = previous == one;
    const auto rows = static_cast<std::int64_t>(n - k - 1);
    const auto cols = static_cast<std::int64_t>(n - k - 1);
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::int64_t ii = 0; ii < rows; ++ii) {
      for (std::int64_t jj = 0; jj < cols; ++jj) {
        std::size_t i = k + 1 + ii, j = k + 1 + jj;
        MultiPoly& target = a[i][j];
        if (a[i][k].isZero()) {
          if (pivotIsPrevious || target.isZero()) continue;
          target = mul(target, p);
        } else {
          target = sub(mul(target, p), mul(a[i][k], a[k][j]));
        }
        if (!previousIsOne && !target.isZero()) target = divideExact(target, previous);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = MultiPoly(m.ring(), m.varCount());
    previous = a[k][k];
  }
  return negate ? neg(a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace ca

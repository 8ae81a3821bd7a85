// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact; the only tolerances are the
// wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ca/bad_primes.hpp"
#include "ca/factor.hpp"
#include "ca/finite_field.hpp"
#include "ca/hasse.hpp"
#include "ca/structure.hpp"
#include "ca/sylvester.hpp"

using namespace ca;

namespace {

constexpr double kCoefficientLimitSeconds = 60.0;
constexpr double kSpecializationLimitSeconds = 120.0;
constexpr int kRandomPointsPerIndex = 100;
constexpr long kPointRange = 20;

ResultantStore& store() {
  static ResultantStore s;
  return s;
}

// Collects mismatches for one criterion; keeps the first few for the report.
struct Failures {
  std::size_t count = 0;
  std::vector<std::string> samples;

  void add(const std::string& what) {
    if (count++ < 3) samples.push_back(what);
  }
  bool ok() const { return count == 0; }
  std::string summary() const {
    std::string s = std::to_string(count) + " mismatch(es)";
    for (const auto& x : samples) s += "; " + x;
    return s;
  }
};

std::string tagOf(unsigned d, unsigned i) { return "d=" + std::to_string(d) + ",i=" + std::to_string(i); }

ExponentVector power(unsigned d, unsigned var, unsigned e) { return ExponentVector::unit(d - 1, var, e); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome theoremCoefficient() {
  auto start = std::chrono::steady_clock::now();
  Failures f;
  for (unsigned d = 2; d <= 8; ++d)
    for (unsigned i = 1; i < d; ++i) {
      mpz_class want = binomial(d, i) - 1;
      mpz_pow_ui(want.get_mpz_t(), want.get_mpz_t(), d - i);
      if ((d - i) % 2) want = -want;
      mpz_class got = coefficientOf(store().get(d, i), power(d, d - i, d));
      if (got != want) f.add(tagOf(d, i) + " got " + got.get_str() + " want " + want.get_str());
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > kCoefficientLimitSeconds) f.add("took " + std::to_string(secs) + " s");
  return {f.ok(), f.ok() ? "d<=8, " + std::to_string(secs) + " s" : f.summary()};
}

Outcome onlyPurePowers() {
  Failures f;
  for (unsigned d = 2; d <= 8; ++d) {
    std::set<std::pair<unsigned, unsigned>> seen, want;
    for (unsigned i = 1; i < d; ++i) {
      want.insert({d - i, d});
      for (const auto& m : store().get(d, i).terms()) {
        auto e = m.first.toVector();
        unsigned support = 0, var = 0;
        for (unsigned v = 0; v < e.size(); ++v)
          if (e[v]) ++support, var = v + 1;
        if (support == 1) seen.insert({var, e[var - 1]});
      }
    }
    if (seen != want) f.add("d=" + std::to_string(d));
  }
  return {f.ok(), f.ok() ? "d<=8" : f.summary()};
}

Outcome propositionIdentity() {
  Failures f;
  for (unsigned d = 2; d <= 8; ++d)
    for (unsigned i = 1; i < d; ++i) {
      const MultiPoly& r = store().get(d, i);
      unsigned minDeg = ~0u;
      for (const auto& m : r.terms()) minDeg = std::min(minDeg, m.first.totalDegree());
      std::vector<ExponentVector> atMin;
      for (const auto& m : r.terms())
        if (m.first.totalDegree() == minDeg) atMin.push_back(m.first);
      ExponentVector target = power(d, d - 1, d - i);
      target.set(d - i - 1, target.toVector()[d - i - 1] + 1);
      mpz_class want;
      if (i == 1) {
        mpz_pow_ui(want.get_mpz_t(), mpz_class(1 - static_cast<long>(d)).get_mpz_t(), d - 1);
      } else {
        mpz_pow_ui(want.get_mpz_t(), binomial(d, i).get_mpz_t(), d - 1);
        if (((d - 1) * (d - i)) % 2) want = -want;
      }
      if (minDeg != d - i + 1) f.add(tagOf(d, i) + " min degree " + std::to_string(minDeg));
      if (atMin.size() != 1 || !(atMin[0] == target)) f.add(tagOf(d, i) + " minimum not unique/at target");
      if (coefficientOf(r, target) != want) f.add(tagOf(d, i) + " coefficient " + coefficientOf(r, target).get_str());
    }
  return {f.ok(), f.ok() ? "d<=8 including i=1" : f.summary()};
}

Outcome subsetOracle() {
  Failures f;
  for (unsigned d = 2; d <= 8; ++d)
    for (unsigned i = 1; i < d; ++i)
      if (coefficientViaSubsets(d, i) != coefficientOf(store().get(d, i), power(d, d - i, d))) f.add(tagOf(d, i));
  for (unsigned m = 1; m <= 14; ++m) {
    std::vector<unsigned long> count(m + 1, 0);
    for (const auto& j : enumerateJSubsets(m + 1, 1)) ++count.at(j.k);
    for (unsigned k = 0; k <= m; ++k)
      if (count[k] != binomial(m, k)) f.add("m=" + std::to_string(m) + ",k=" + std::to_string(k));
  }
  return {f.ok(), f.ok() ? "coefficients d<=8, counts d-i<=14" : f.summary()};
}

Outcome structuralChecks() {
  Failures f;
  for (unsigned d = 2; d <= 10; ++d)
    for (unsigned i = 1; i < d; ++i) {
      const unsigned n = 2 * d - i;
      PolyMatrix m = caMatrix(d, i);
      MultiPoly a = MultiPoly::variable(Ring::integers(), d - 1, d - i);
      unsigned nonzero = 0;
      for (unsigned r = 0; r < n; ++r) nonzero += !m.at(r, n - 1).isZero();
      bool lastOk = nonzero == 1;
      for (unsigned r = 0; r < n; ++r)
        if (!m.at(r, n - 1).isZero() && !(m.at(r, n - 1) == a)) lastOk = false;
      if (!lastOk) f.add(tagOf(d, i) + " last column");
      for (unsigned col = 1; col <= n; ++col) {
        unsigned want = col > n - i ? 1 : (col >= d - i + 1 && col <= 2 * d - 2 * i ? 2 : ~0u);
        if (want == ~0u) continue;
        unsigned count = 0;
        for (unsigned r = 0; r < n; ++r) count += m.at(r, col - 1) == a;
        if (count != want) f.add(tagOf(d, i) + " column " + std::to_string(col));
      }
      const MultiPoly& r = store().get(d, i);
      for (const auto& t : r.terms()) {
        unsigned e = t.first.toVector()[d - i - 1];
        if (e == 0) f.add(tagOf(d, i) + " term not divisible by a" + std::to_string(d - i));
        if (e >= d + 1) f.add(tagOf(d, i) + " term divisible by a" + std::to_string(d - i) + "^(d+1)");
      }
    }
  return {f.ok(), f.ok() ? "d<=10" : f.summary()};
}

Outcome determinantOracles() {
  Failures f;
  for (unsigned d = 2; d <= 8; ++d)
    for (unsigned i = 1; i < d; ++i) {
      PolyMatrix m = caMatrix(d, i);
      if (!(determinantBareiss(m) == store().get(d, i))) f.add(tagOf(d, i) + " Bareiss");
    }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> coord(-kPointRange, kPointRange);
  unsigned points = 0;
  for (unsigned d = 2; d <= 6; ++d) {
    GenericCAPoly g = buildGeneric(d);
    for (unsigned i = 1; i < d; ++i) {
      UniPoly<MultiPoly> h = hasseDerivative(g.body, i);
      for (int t = 0; t < kRandomPointsPerIndex;) {
        std::vector<mpz_class> pt;
        for (unsigned v = 1; v < d; ++v) pt.emplace_back(coord(rng));
        UniPoly<mpz_class> fs = specializePoly(g.body, pt), hs = specializePoly(h, pt);
        if (fs.coeffs.front() == 0 || hs.coeffs.front() == 0) continue;
        ++t;
        ++points;
        if (specialize(store().get(d, i), pt) != subresultantResultant(fs, hs)) f.add(tagOf(d, i) + " at a point");
      }
    }
  }
  return {f.ok(), f.ok() ? "Bareiss d<=8; " + std::to_string(points) + " PRS points d<=6" : f.summary()};
}

// x^d + x^{d-i}, built here rather than taken from the library.
FpPoly binomialPoly(unsigned d, unsigned i, std::uint64_t p) {
  std::vector<std::uint64_t> c(d + 1, 0);
  c[0] = 1;
  c[i] = 1;
  return FpPoly(p, c);
}

Outcome corollarySuite() {
  Failures f;
  unsigned tested = 0, skipped = 0;
  for (unsigned d = 2; d <= 12; ++d)
    for (unsigned i = 1; i < d; ++i) {
      mpz_class v = binomial(d, i) - 1;
      if (v < 2) continue;
      Factorization fac = factorize(v);
      if (!fac.complete()) {
        ++skipped;
        continue;
      }
      for (const auto& [p, e] : fac.factors) {
        std::uint64_t pp = p.get_ui();
        ++tested;
        if (!isCasasAlvero(binomialPoly(d, i, pp)).isCasasAlvero) f.add(tagOf(d, i) + ",p=" + p.get_str());
        CAWitness w = corollaryWitness(d, i, pp);
        if (!w.isCasasAlvero || w.isTrivial) f.add(tagOf(d, i) + ",p=" + p.get_str() + " library witness");
      }
    }
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    std::vector<std::uint64_t> c(p + 2, 0);
    c[0] = 1;
    c[1] = p - 1;
    CAWitness w = isCasasAlvero(FpPoly(p, c));
    if (!w.isCasasAlvero || w.isTrivial) f.add("x^(p+1) - x^p, p=" + std::to_string(p));
  }
  return {f.ok(), f.ok() ? std::to_string(tested) + " (d,i,p) triples, " + std::to_string(skipped) + " incomplete"
                         : f.summary()};
}

Outcome specializationSuite() {
  auto start = std::chrono::steady_clock::now();
  Failures f;
  unsigned long checks = 0;
  for (unsigned d = 2; d <= 5; ++d)
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      std::vector<MultiPoly> reduced;
      for (unsigned i = 1; i < d; ++i) reduced.push_back(reduceMod(store().get(d, i), p));
      std::vector<std::uint64_t> a(d - 1, 0);
      while (true) {
        std::vector<std::uint64_t> c{1};
        c.insert(c.end(), a.begin(), a.end());
        c.push_back(0);
        FpPoly fp(p, c);
        std::vector<mpz_class> pt(a.begin(), a.end());
        for (unsigned i = 1; i < d; ++i) {
          bool shared = gcdFp(fp, hasseDerivativeFp(fp, i)).degree() > 0;
          bool vanishes = specialize(reduced[i - 1], pt) == 0;
          ++checks;
          if (shared != vanishes) f.add(tagOf(d, i) + ",p=" + std::to_string(p) + " at " + fp.toString());
        }
        unsigned k = 0;
        while (k < a.size() && ++a[k] == p) a[k++] = 0;
        if (k == a.size()) break;
      }
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > kSpecializationLimitSeconds) f.add("took " + std::to_string(secs) + " s");
  return {f.ok(), f.ok() ? std::to_string(checks) + " checks, " + std::to_string(secs) + " s" : f.summary()};
}

// Plain first derivative, applied repeatedly.
UniPoly<MultiPoly> derive(const UniPoly<MultiPoly>& f) {
  const unsigned n = f.formalDegree();
  std::vector<MultiPoly> out;
  for (unsigned j = 0; j < n; ++j) out.push_back(scale(f.coeffs[j], mpz_class(n - j)));
  return UniPoly<MultiPoly>(std::move(out));
}

Outcome hasseIdentities() {
  Failures f;
  for (unsigned d = 1; d <= 10; ++d) {
    GenericCAPoly g = buildGeneric(d);
    UniPoly<MultiPoly> repeated = g.body;
    for (unsigned i = 0; i <= d; ++i) {
      if (i > 0) repeated = derive(repeated);
      if (!(scalePoly(hasseDerivative(g.body, i), factorial(i)) == repeated)) f.add("i!H_i d=" + std::to_string(d));
      for (unsigned j = 0; i + j <= d; ++j) {
        auto lhs = hasseDerivative(hasseDerivative(g.body, j), i);
        auto rhs = scalePoly(hasseDerivative(g.body, i + j), binomial(i + j, i));
        if (!(lhs == rhs)) f.add("composition d=" + std::to_string(d) + ",i=" + std::to_string(i) + ",j=" + std::to_string(j));
      }
    }
  }
  return {f.ok(), f.ok() ? "d<=10" : f.summary()};
}

Outcome ladderReport() {
  Failures f;
  auto blockedSet = [](const CoverageReport& r) {
    std::vector<unsigned> out;
    for (const auto& [m, ds] : r.blocked) out.push_back(m);
    return out;
  };
  CoverageReport base = ladderCoverage(defaultGoodnessTable(7), 40);
  if (blockedSet(base) != std::vector<unsigned>{12, 20, 24, 30, 36, 40}) f.add("default blocked set");
  if (!base.undecided.count(28)) f.add("28 not undecided");
  GoodnessTable user = defaultGoodnessTable(7);
  user.merge(parseGoodnessTable("degree=4 bad=7 source=user table\n"));
  if (blockedSet(ladderCoverage(user, 40)) != std::vector<unsigned>{12, 20, 24, 28, 30, 36, 40})
    f.add("user-table blocked set");
  return {f.ok(), f.ok() ? "bound 40" : f.summary()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"theorem coefficient of a_{d-i}^d", theoremCoefficient},
      {"only pure powers", onlyPurePowers},
      {"minimal-degree monomial", propositionIdentity},
      {"J-subset oracle", subsetOracle},
      {"structural matrix checks", structuralChecks},
      {"determinant oracles", determinantOracles},
      {"finite-field witnesses", corollarySuite},
      {"resultant/gcd equivalence", specializationSuite},
      {"Hasse identities", hasseIdentities},
      {"ladder report", ladderReport},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}

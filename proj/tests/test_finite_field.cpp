#include "doctest.h"

#include "test_support.hpp"
#include "ca/error.hpp"
#include "ca/finite_field.hpp"
#include "ca/hasse.hpp"
#include "ca/sylvester.hpp"

using namespace ca;

TEST_CASE("FpPoly canonical form") {
  FpPoly p(5, {0, 0, 7, 5, 1});
  CHECK(p.coeffs() == std::vector<std::uint64_t>{2, 0, 1});
  CHECK(p.degree() == 2);
  CHECK(FpPoly(3, {0, 3}).isZero());
  CHECK(FpPoly(3, {}).degree() == -1);
  CHECK(FpPoly(5, {1, 0, 1, 0, 0}).toString() == "x^4 + x^2");
}

TEST_CASE("gcdFp") {
  CHECK(gcdFp(FpPoly(2, {1, 0, 0}), FpPoly(2, {1, 1, 0, 0})) == FpPoly(2, {1, 0, 0}));
  CHECK(gcdFp(FpPoly(7, {3, 1, 4}), FpPoly(7, {1})) == FpPoly(7, {1}));
  CHECK(gcdFp(FpPoly(5, {1, 0, 1, 0, 0}), FpPoly(5, {1, 0, 1})) == FpPoly(5, {1, 0, 1}));
  CHECK(gcdFp(FpPoly(5, {2, 0, 2}), FpPoly(5, {})) == FpPoly(5, {1, 0, 1}));
  CHECK_THROWS_AS(gcdFp(FpPoly(5, {}), FpPoly(5, {})), DomainError);
  CHECK_THROWS_AS(gcdFp(FpPoly(5, {1}), FpPoly(7, {1})), StructuralError);
}

TEST_CASE("hasseDerivativeFp reduces exact binomials") {
  // H_2(x^4 + x^2) over F_5: C(4,2) x^2 + C(2,2) = 6x^2 + 1 = x^2 + 1.
  CHECK(hasseDerivativeFp(FpPoly(5, {1, 0, 1, 0, 0}), 2) == FpPoly(5, {1, 0, 1}));
  // H_1(x^3 + x^2) over F_3: 3x^2 + 2x = 2x.
  CHECK(hasseDerivativeFp(FpPoly(3, {1, 1, 0, 0}), 1) == FpPoly(3, {2, 0}));
}

TEST_CASE("isCasasAlvero") {
  CAWitness w = isCasasAlvero(FpPoly(2, {1, 1, 0, 0}));
  CHECK(w.isCasasAlvero);
  CHECK_FALSE(w.isTrivial);

  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    for (unsigned d = 2; d <= 8; ++d) {
      CAWitness t = isCasasAlvero(FpPoly::monomial(p, d));
      CHECK(t.isCasasAlvero);
      CHECK(t.isTrivial);
    }
  }

  CAWitness w5 = isCasasAlvero(FpPoly(5, {1, 0, 1, 0, 0}));
  CHECK(w5.isCasasAlvero);
  REQUIRE(w5.perIndex.size() == 3);
  CHECK(w5.perIndex[0].second == FpPoly(5, {1, 0}));
  CHECK(w5.perIndex[1].second == FpPoly(5, {1, 0, 1}));
  CHECK(w5.perIndex[2].second == FpPoly(5, {1, 0}));

  // x^2 + x over F_3 shares nothing with 2x + 1.
  CHECK_FALSE(isCasasAlvero(FpPoly(3, {1, 1, 0})).isCasasAlvero);

  CHECK_THROWS_AS(isCasasAlvero(FpPoly(5, {2, 0, 1, 0})), DomainError);  // not monic
  CHECK_THROWS_AS(isCasasAlvero(FpPoly(5, {1, 0, 1, 1})), DomainError);  // a_d != 0
  CHECK_THROWS_AS(isCasasAlvero(FpPoly(5, {1, 0})), DomainError);        // degree 1
}

TEST_CASE("x^{p+1} - x^p is Casas-Alvero over F_p") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    std::vector<std::uint64_t> c(p + 2, 0);
    c[0] = 1;
    c[1] = p - 1;
    CAWitness w = isCasasAlvero(FpPoly(p, c));
    CHECK(w.isCasasAlvero);
    CHECK_FALSE(w.isTrivial);
  }
}

TEST_CASE("corollaryWitness") {
  CHECK(corollaryWitness(3, 1, 2).isCasasAlvero);
  CHECK(corollaryWitness(3, 1, 2).f == FpPoly(2, {1, 1, 0, 0}));
  CHECK(corollaryWitness(4, 2, 5).isCasasAlvero);
  CAWitness w = corollaryWitness(4, 1, 3);
  CHECK(w.isCasasAlvero);
  CHECK(w.f == FpPoly(3, {1, 1, 0, 0, 0}));
  CHECK_THROWS_AS(corollaryWitness(4, 1, 5), DomainError);  // 5 does not divide 3
  CHECK_THROWS_AS(corollaryWitness(4, 2, 4), DomainError);  // not prime
  CHECK_THROWS_AS(corollaryWitness(4, 4, 5), DomainError);
}

TEST_CASE("mod-p degeneration at the witness point, d <= 8") {
  ResultantStore store;
  for (unsigned d = 3; d <= 8; ++d) {
    for (unsigned i = 1; i < d; ++i) {
      mpz_class value = binomial(d, i) - 1;
      for (unsigned long p = 2; p <= value; ++p) {
        if (!mpz_divisible_ui_p(value.get_mpz_t(), p) || !mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30)) continue;
        std::vector<mpz_class> point(d - 1, 0);
        point[i - 1] = 1;
        for (unsigned j = 1; j < d; ++j) {
          CHECK_MESSAGE(specialize(reduceMod(store.get(d, j), p), point) == 0, "d=", d, " i=", i, " p=", p,
                        " j=", j);
        }
      }
    }
  }
}

TEST_CASE("exhaustiveSearch") {
  auto r32 = exhaustiveSearch(3, 2);
  // x^3 + x = x(x+1)^2 is the translate of x^3 + x^2 by x -> x + 1.
  REQUIRE(r32.size() == 3);
  CHECK(r32[0].f == FpPoly(2, {1, 0, 0, 0}));
  CHECK(r32[0].isTrivial);
  CHECK(r32[1].f == FpPoly(2, {1, 0, 1, 0}));
  CHECK(r32[2].f == FpPoly(2, {1, 1, 0, 0}));
  CHECK_FALSE(r32[1].isTrivial);
  CHECK_FALSE(r32[2].isTrivial);

  auto r23 = exhaustiveSearch(2, 3);
  REQUIRE(r23.size() == 1);
  CHECK(r23[0].isTrivial);

  auto r43 = exhaustiveSearch(4, 3);
  CHECK(std::any_of(r43.begin(), r43.end(), [](const CAWitness& w) { return w.f == FpPoly(3, {1, 1, 0, 0, 0}); }));

  for (unsigned d = 2; d <= 6; ++d)
    for (std::uint64_t p : {2u, 3u, 5u}) {
      auto par = exhaustiveSearch(d, p);
      auto ser = exhaustiveSearchSerial(d, p);
      REQUIRE(par.size() == ser.size());
      for (std::size_t k = 0; k < par.size(); ++k) CHECK(par[k].f == ser[k].f);
      CHECK(std::any_of(par.begin(), par.end(), [](const CAWitness& w) { return w.isTrivial; }));
      CHECK(std::is_sorted(par.begin(), par.end(),
                           [](const CAWitness& a, const CAWitness& b) { return a.f.coeffs() < b.f.coeffs(); }));
    }

  CHECK_THROWS_AS(exhaustiveSearch(8, 7, 1000), ResourceError);
  CHECK_THROWS_AS(exhaustiveSearch(3, 4), DomainError);
}

TEST_CASE("groupScalingOrbits") {
  auto results = exhaustiveSearch(4, 5);
  auto orbits = groupScalingOrbits(results);
  std::size_t members = 0;
  for (const auto& o : orbits) members += o.members.size();
  CHECK(members == results.size());
  // x^4 is fixed by scaling and sits alone.
  CHECK(orbits.front().representative == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(orbits.front().members.size() == 1);
}

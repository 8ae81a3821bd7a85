#include "doctest.h"

#include "ca/error.hpp"
#include "ca/hasse.hpp"
#include "test_support.hpp"

using namespace ca;

namespace {

const Ring Z = Ring::integers();

MultiPoly c(unsigned vars, long v) { return MultiPoly::constant(Z, vars, v); }
MultiPoly a(unsigned vars, unsigned j) { return MultiPoly::variable(Z, vars, j); }

UniPoly<MultiPoly> xPower(unsigned n) {
  std::vector<MultiPoly> coeffs(n + 1, MultiPoly(Z, 0));
  coeffs[0] = c(0, 1);
  return UniPoly<MultiPoly>(coeffs);
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(68, 34) == mpz_class("28453041475240576740"));  // past 64 bits
}

TEST_CASE("buildGeneric") {
  GenericCAPoly f2 = buildGeneric(2);
  CHECK(f2.body == UniPoly<MultiPoly>({c(1, 1), a(1, 1), MultiPoly(Z, 1)}));
  GenericCAPoly f3 = buildGeneric(3);
  CHECK(f3.body == UniPoly<MultiPoly>({c(2, 1), a(2, 1), a(2, 2), MultiPoly(Z, 2)}));
  GenericCAPoly f1 = buildGeneric(1);
  CHECK(f1.body == UniPoly<MultiPoly>({c(0, 1), MultiPoly(Z, 0)}));
  CHECK(f3.body.coeffs.back().isZero());
  CHECK_THROWS_AS(buildGeneric(0), DomainError);
}

TEST_CASE("hasseDerivative") {
  CHECK(hasseDerivative(buildGeneric(2).body, 1) == UniPoly<MultiPoly>({c(1, 2), a(1, 1)}));
  CHECK(hasseDerivative(buildGeneric(3).body, 2) == UniPoly<MultiPoly>({c(2, 3), a(2, 1)}));
  const auto f5 = buildGeneric(5).body;
  CHECK(hasseDerivative(f5, 0) == f5);
  CHECK_THROWS_AS(hasseDerivative(f5, 6), DomainError);
  CHECK_THROWS_AS(hasseDerivative(f5, -1), DomainError);

  // C(d - j, i) a_j: the coefficient of x^{d-i-j}.
  const auto h2 = hasseDerivative(f5, 2);
  CHECK(h2.formalDegree() == 3);
  CHECK(h2.coeffs[1] == scale(a(4, 1), 6));  // C(4,2)
  CHECK(h2.coeffs[3] == a(4, 3));            // C(2,2) a_{d-i}
}

TEST_CASE("ordinaryDerivative") {
  CHECK(ordinaryDerivative(xPower(3), 1) == UniPoly<MultiPoly>({c(0, 3), MultiPoly(Z, 0), MultiPoly(Z, 0)}));
  CHECK(ordinaryDerivative(buildGeneric(2).body, 2) == UniPoly<MultiPoly>({c(1, 2)}));
  const auto f4 = buildGeneric(4).body;
  CHECK(ordinaryDerivative(f4, 0) == f4);
  CHECK_THROWS_AS(ordinaryDerivative(f4, 5), DomainError);
}

TEST_CASE("i! H_i(f) equals the i-th derivative, d <= 10") {
  for (unsigned d = 1; d <= 10; ++d) {
    const auto f = buildGeneric(d).body;
    for (unsigned i = 0; i <= d; ++i) {
      CHECK(scalePoly(hasseDerivative(f, i), factorial(i)) == ordinaryDerivative(f, i));
    }
  }
}

TEST_CASE("H_i(x^n) = C(n,i) x^{n-i}") {
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned i = 0; i <= n; ++i) {
      auto expected = xPower(n - i);
      expected.coeffs[0] = c(0, binomial(n, i).get_si());
      CHECK(hasseDerivative(xPower(n), i) == expected);
    }
  }
}

TEST_CASE("H_i(H_j(f)) = C(i+j, i) H_{i+j}(f)") {
  for (unsigned d = 1; d <= 10; ++d) {
    const auto f = buildGeneric(d).body;
    for (unsigned j = 0; j <= d; ++j)
      for (unsigned i = 0; i + j <= d; ++i) {
        CHECK(hasseDerivative(hasseDerivative(f, j), i) == scalePoly(hasseDerivative(f, i + j), binomial(i + j, i)));
      }
  }
}

TEST_CASE("top Hasse derivatives of the generic polynomial") {
  for (unsigned d = 2; d <= 10; ++d) {
    const auto f = buildGeneric(d).body;
    CHECK(hasseDerivative(f, d) == UniPoly<MultiPoly>({c(d - 1, 1)}));
    CHECK(hasseDerivative(f, d - 1) == UniPoly<MultiPoly>({c(d - 1, d), a(d - 1, 1)}));
  }
}

TEST_CASE("integer coefficients use the same machinery") {
  UniPoly<mpz_class> f({1, 3, 0});
  CHECK(hasseDerivative(f, 1) == UniPoly<mpz_class>({2, 3}));
  CHECK(specializePoly(buildGeneric(2).body, {3}) == f);
}

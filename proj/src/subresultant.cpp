#include <algorithm>
#include <vector>

#include "ca/error.hpp"
#include "ca/sylvester.hpp"

namespace ca {

namespace {

// Ascending coefficient vector with nonzero last entry (empty for zero).
using Dense = std::vector<mpz_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

long degree(const Dense& p) { return static_cast<long>(p.size()) - 1; }

mpz_class content(const Dense& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

mpz_class power(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

void divideAll(Dense& p, const mpz_class& by) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), by.get_mpz_t());
}

// lc(b)^{deg a - deg b + 1} * a mod b
Dense pseudoRemainder(Dense a, const Dense& b) {
  const long db = degree(b);
  const long delta = degree(a) - db;
  const mpz_class& lb = b.back();
  long steps = 0;
  while (!a.empty() && degree(a) >= db) {
    mpz_class la = a.back();
    long shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (long k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    ++steps;
  }
  mpz_class fix = power(lb, static_cast<unsigned long>(delta + 1 - steps));
  for (auto& c : a) c *= fix;
  return a;
}

}  // namespace

mpz_class subresultantResultant(const UniPoly<mpz_class>& f, const UniPoly<mpz_class>& g) {
  Dense a(f.coeffs.rbegin(), f.coeffs.rend());
  Dense b(g.coeffs.rbegin(), g.coeffs.rend());
  if (a.back() == 0 || b.back() == 0) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) throw DomainError("resultant of a zero polynomial");
    throw DomainError("subresultant resultant needs nonzero leading coefficients");
  }
  if (degree(a) < degree(b)) throw DomainError("subresultant resultant needs deg f >= deg g");

  int sign = 1;
  if (degree(b) == 0) return power(b.back(), degree(a));

  mpz_class ca = content(a), cb = content(b);
  divideAll(a, ca);
  divideAll(b, cb);
  mpz_class t = power(ca, degree(b)) * power(cb, degree(a));
  mpz_class gg = 1, h = 1;

  for (;;) {
    const long delta = degree(a) - degree(b);
    if ((degree(a) & 1) && (degree(b) & 1)) sign = -sign;
    Dense r = pseudoRemainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    divideAll(r, gg * power(h, delta));
    b = std::move(r);
    gg = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = gg;
    } else {
      mpz_class num = power(gg, delta);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), power(h, delta - 1).get_mpz_t());
    }
    if (degree(b) > 0) continue;
    const long da = degree(a);
    mpz_class num = power(b.back(), da);
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), power(h, da - 1).get_mpz_t());
    return sign * t * out;
  }
}

}  // namespace ca

#include "ca/hasse.hpp"

#include <sstream>

namespace ca {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

GenericCAPoly buildGeneric(unsigned d, const Ring& ring) {
  if (d < 1) throw DomainError("generic polynomial needs d >= 1");
  const unsigned vars = d - 1;
  std::vector<MultiPoly> coeffs;
  coeffs.reserve(d + 1);
  coeffs.push_back(MultiPoly::constant(ring, vars, 1));
  for (unsigned j = 1; j < d; ++j) coeffs.push_back(MultiPoly::variable(ring, vars, j));
  coeffs.emplace_back(ring, vars);  // a_d = 0
  return {d, UniPoly<MultiPoly>(std::move(coeffs))};
}

UniPoly<mpz_class> specializePoly(const UniPoly<MultiPoly>& f, const std::vector<mpz_class>& point) {
  std::vector<mpz_class> out;
  out.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) out.push_back(specialize(c, point));
  return UniPoly<mpz_class>(std::move(out));
}

namespace {

template <typename Coeff, typename Fmt>
std::string render(const UniPoly<Coeff>& f, Fmt fmt) {
  std::ostringstream os;
  bool first = true;
  for (unsigned j = 0; j < f.coeffs.size(); ++j) {
    if (isZero(f.coeffs[j])) continue;
    unsigned power = f.formalDegree() - j;
    if (!first) os << " + ";
    os << "(" << fmt(f.coeffs[j]) << ")";
    if (power > 0) os << "*x";
    if (power > 1) os << "^" << power;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string formatUniPoly(const UniPoly<MultiPoly>& f) {
  return render(f, [](const MultiPoly& c) { return c.toString(); });
}

std::string formatUniPoly(const UniPoly<mpz_class>& f) {
  return render(f, [](const mpz_class& c) { return c.get_str(); });
}

}  // namespace ca

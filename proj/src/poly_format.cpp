#include "ca/poly_format.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

#include "ca/error.hpp"

namespace ca {

namespace {

constexpr const char* kMagic = "CA-POLY v1";

std::vector<std::string> splitSpaces(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

unsigned parseUnsigned(const std::string& s, const char* what) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw StructuralError(std::string("CA-POLY: bad ") + what + " '" + s + "'");
  }
  // Canonical decimal: no leading zeros.
  if (s.size() > 1 && s[0] == '0') throw StructuralError(std::string("CA-POLY: non-canonical ") + what);
  return value;
}

mpz_class parseCoefficient(const std::string& s) {
  mpz_class c;
  if (s.empty() || c.set_str(s, 10) != 0 || c.get_str() != s) {
    throw StructuralError("CA-POLY: bad coefficient '" + s + "'");
  }
  return c;
}

}  // namespace

void writePoly(std::ostream& out, const MultiPoly& p) {
  out << kMagic << " vars=" << p.varCount() << " ring=" << p.ring().tag() << "\n";
  for (const auto& t : p.sortedTerms()) {
    for (unsigned k = 0; k < t.exponents.size(); ++k) out << t.exponents[k] << " ";
    out << ": " << t.coefficient.get_str() << "\n";
  }
}

std::string formatPoly(const MultiPoly& p) {
  std::ostringstream os;
  writePoly(os, p);
  return os.str();
}

MultiPoly parsePoly(const std::string& text) {
  std::istringstream is(text);
  return readPoly(is);
}

MultiPoly readPoly(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty() || content.back() != '\n') throw StructuralError("CA-POLY: missing final newline");

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < content.size()) {
    std::size_t end = content.find('\n', start);
    lines.push_back(content.substr(start, end - start));
    start = end + 1;
  }

  const std::string& header = lines.front();
  auto fields = splitSpaces(header);
  if (fields.size() != 4 || fields[0] + " " + fields[1] != kMagic || fields[2].rfind("vars=", 0) != 0 ||
      fields[3].rfind("ring=", 0) != 0) {
    throw StructuralError("CA-POLY: bad header '" + header + "'");
  }
  unsigned vars = parseUnsigned(fields[2].substr(5), "variable count");
  std::string ringTag = fields[3].substr(5);
  Ring ring = Ring::integers();
  if (ringTag == "Z") {
    ring = Ring::integers();
  } else if (ringTag.size() > 1 && ringTag[0] == 'F') {
    mpz_class m = parseCoefficient(ringTag.substr(1));
    if (m < 2) throw StructuralError("CA-POLY: modulus must be at least 2");
    ring = Ring::modulo(m);
  } else {
    throw StructuralError("CA-POLY: bad ring '" + ringTag + "'");
  }

  MultiPoly p(ring, vars);
  const ExponentVector* previous = nullptr;
  ExponentVector prevStorage;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::string& line = lines[n];
    auto colon = line.find(':');
    if (colon == std::string::npos) throw StructuralError("CA-POLY: term line without ':'");
    std::string lhs = line.substr(0, colon);
    std::string rhs = line.substr(colon + 1);
    if (rhs.size() < 2 || rhs[0] != ' ') throw StructuralError("CA-POLY: malformed term line");
    auto expTokens = splitSpaces(lhs);
    if (expTokens.size() != vars) throw StructuralError("CA-POLY: exponent count does not match vars");
    std::vector<unsigned> exps;
    for (const auto& tok : expTokens) exps.push_back(parseUnsigned(tok, "exponent"));
    ExponentVector e(exps);
    mpz_class c = parseCoefficient(rhs.substr(1));
    if (c == 0) throw StructuralError("CA-POLY: zero coefficient");
    if (!ring.isIntegers() && ring.normalize(c) != c) throw StructuralError("CA-POLY: residue out of range");
    if (previous && !grlexGreater(*previous, e)) throw StructuralError("CA-POLY: terms not in grlex order");
    p.accumulate(e, c);
    prevStorage = e;
    previous = &prevStorage;
  }

  // Final byte check guards against whitespace variations the tokenizer
  // would otherwise accept.
  if (formatPoly(p) != content) throw StructuralError("CA-POLY: input is not in canonical form");
  return p;
}

}  // namespace ca

#pragma once

#include <iosfwd>
#include <string>

#include "ca/multipoly.hpp"

namespace ca {

// CA-POLY v1:
//
//   CA-POLY v1 vars=<n> ring=<Z|F<p>>
//   e_1 e_2 ... e_n : <decimal coefficient>
//   ...
//
// Terms are listed leading term first under graded lexicographic order.
// The reader only accepts the canonical form the writer produces, so
// read(write(p)) == p and write(read(s)) == s.

std::string formatPoly(const MultiPoly& p);
void writePoly(std::ostream& out, const MultiPoly& p);

MultiPoly parsePoly(const std::string& text);
MultiPoly readPoly(std::istream& in);

}  // namespace ca

#pragma once

#include <stdexcept>
#include <string>

namespace ca {

// Mismatched rings, variable counts, malformed files or tables.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource guard (matrix side, search cap, rho budget) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ca

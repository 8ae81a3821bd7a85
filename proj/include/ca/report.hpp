#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ca/bad_primes.hpp"
#include "ca/finite_field.hpp"
#include "ca/structure.hpp"

namespace ca {

using Json = nlohmann::ordered_json;

struct Claim {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

/// Top-level JSON document written by every CLI command:
/// {command, params, claims:[{name,status,expected,actual}], findings, files, elapsed_ms}.
/// Integers that may exceed 64 bits are written as decimal strings.
struct RunReport {
  std::string command;
  Json params = Json::object();
  std::vector<Claim> claims;
  Json findings = Json::array();
  std::vector<std::string> files;
  long long elapsedMs = 0;

  bool allPass() const;
  Json toJson() const;
};

/// Appends the seven claims of a TheoremReport, named "<claim>[d=..,i=..]".
void appendClaims(RunReport& run, const TheoremReport& rep);

Json toJson(const TheoremReport& rep);
Json toJson(const BadPrimeReport& rep);
Json toJson(const CAWitness& w);
Json toJson(const CoverageReport& rep);
Json toJson(const ScalingOrbit& orbit);

}  // namespace ca

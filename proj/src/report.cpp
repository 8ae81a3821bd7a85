#include "ca/report.hpp"

#include <algorithm>

namespace ca {

bool RunReport::allPass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

Json RunReport::toJson() const {
  Json doc;
  doc["command"] = command;
  doc["params"] = params;
  Json cl = Json::array();
  for (const auto& c : claims) {
    cl.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"expected", c.expected},
                  {"actual", c.actual}});
  }
  doc["claims"] = std::move(cl);
  doc["findings"] = findings;
  doc["files"] = files;
  doc["elapsed_ms"] = elapsedMs;
  return doc;
}

void appendClaims(RunReport& run, const TheoremReport& rep) {
  const std::string tag = "[d=" + std::to_string(rep.d) + ",i=" + std::to_string(rep.i) +
                          (rep.ring.isIntegers() ? "" : ",mod=" + rep.ring.modulus().get_str()) + "]";
  for (const auto& name : theoremClaimNames()) {
    const ClaimResult& r = rep.claims.at(name);
    std::string actual = r.actual;
    if (!r.pass && !r.detail.empty()) actual += " (" + r.detail + ")";
    run.claims.push_back({name + tag, r.pass, r.expected, actual});
  }
  for (const auto& f : rep.findings) run.findings.push_back({{"d", rep.d}, {"i", rep.i}, {"finding", f}});
}

namespace {

Json monomialJson(const Monomial& m) {
  return {{"exponents", m.exponents.toVector()}, {"coefficient", m.coefficient.get_str()}};
}

Json decompositionsJson(const std::vector<Decomposition>& ds) {
  Json out = Json::array();
  for (const auto& x : ds) out.push_back({{"d", x.d}, {"p", x.p}, {"l", x.l}, {"status", statusName(x.status)}});
  return out;
}

}  // namespace

Json toJson(const TheoremReport& rep) {
  Json doc;
  doc["d"] = rep.d;
  doc["i"] = rep.i;
  doc["ring"] = rep.ring.tag();
  Json pp = Json::array();
  for (const auto& p : rep.purePowers) {
    pp.push_back({{"variable", p.variable}, {"exponent", p.exponent}, {"coefficient", p.coefficient.get_str()}});
  }
  doc["pure_powers"] = std::move(pp);
  doc["expected_pure_power_coefficient"] = rep.expectedPurePowerCoeff.get_str();
  Json mins = Json::array();
  for (const auto& m : rep.minDegreeMonomials) mins.push_back(monomialJson(m));
  doc["min_degree_monomials"] = std::move(mins);
  Json claims = Json::object();
  for (const auto& name : theoremClaimNames()) {
    const ClaimResult& r = rep.claims.at(name);
    claims[name] = {{"status", r.pass ? "pass" : "fail"}, {"expected", r.expected}, {"actual", r.actual},
                    {"detail", r.detail}};
  }
  doc["claims"] = std::move(claims);
  doc["findings"] = rep.findings;
  return doc;
}

Json toJson(const BadPrimeReport& rep) {
  Json doc;
  doc["d"] = rep.d;
  Json per = Json::array();
  for (const auto& e : rep.perIndex) {
    Json fac = Json::array();
    for (const auto& [p, m] : e.factorization) fac.push_back({{"prime", p.get_str()}, {"multiplicity", m}});
    Json entry{{"i", e.i}, {"value", e.value.get_str()}, {"factorization", std::move(fac)}};
    entry["unfactored_cofactor"] = e.unfactoredCofactor ? Json(e.unfactoredCofactor->get_str()) : Json(nullptr);
    per.push_back(std::move(entry));
  }
  doc["per_index"] = std::move(per);
  Json primes = Json::array();
  for (const auto& p : rep.badPrimes) primes.push_back(p.get_str());
  doc["bad_primes"] = std::move(primes);
  doc["complete"] = rep.complete;
  return doc;
}

Json toJson(const CAWitness& w) {
  Json doc;
  doc["p"] = w.p;
  doc["f"] = w.f.toString();
  doc["coefficients"] = w.f.coeffs();
  Json per = Json::array();
  for (const auto& [i, g] : w.perIndex) per.push_back({{"i", i}, {"gcd", g.toString()}, {"gcd_degree", g.degree()}});
  doc["per_index"] = std::move(per);
  doc["is_casas_alvero"] = w.isCasasAlvero;
  doc["is_trivial"] = w.isTrivial;
  return doc;
}

Json toJson(const CoverageReport& rep) {
  Json doc;
  doc["bound"] = rep.bound;
  Json summary;
  for (const auto* group : {&rep.blocked, &rep.undecided}) {
    Json degrees = Json::array();
    for (const auto& [m, ds] : *group) degrees.push_back(m);
    summary[group == &rep.blocked ? "blocked" : "undecided"] = std::move(degrees);
  }
  doc["summary"] = std::move(summary);
  Json covered = Json::array();
  for (const auto& [m, w] : rep.covered) covered.push_back({{"degree", m}, {"d", w.d}, {"p", w.p}, {"l", w.l}});
  doc["covered"] = std::move(covered);
  Json blocked = Json::array();
  for (const auto& [m, ds] : rep.blocked) {
    blocked.push_back({{"degree", m},
                       {"reason", ds.empty() ? "no decomposition d*p^l over the base degrees"
                                             : "every decomposition uses a bad prime"},
                       {"decompositions", decompositionsJson(ds)}});
  }
  doc["blocked"] = std::move(blocked);
  Json undecided = Json::array();
  for (const auto& [m, ds] : rep.undecided) {
    undecided.push_back({{"degree", m}, {"decompositions", decompositionsJson(ds)}});
  }
  doc["undecided"] = std::move(undecided);
  return doc;
}

Json toJson(const ScalingOrbit& orbit) {
  Json members = Json::array();
  for (const auto& f : orbit.members) members.push_back(f.toString());
  return {{"representative", orbit.representative}, {"members", std::move(members)}};
}

}  // namespace ca

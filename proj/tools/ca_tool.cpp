// ca-tool: resultants of the generic Casas-Alvero polynomial, structural
// checks on their monomials, bad primes, F_p witnesses and the degree ladder.
//
// Exit codes: 0 all claims pass, 1 a claim failed, 2 usage error,
// 3 resource guard hit.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"

#include "ca/bad_primes.hpp"
#include "ca/cache.hpp"
#include "ca/error.hpp"
#include "ca/finite_field.hpp"
#include "ca/poly_format.hpp"
#include "ca/report.hpp"
#include "ca/structure.hpp"
#include "ca/sylvester.hpp"

namespace {

constexpr int kExitClaim = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Globals {
  unsigned maxSide = 24;
  bool noTiming = false;
  bool noCache = false;
  int threads = 0;
};

class Timer {
 public:
  long long elapsedMs() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void guardSide(const Globals& g, unsigned d, unsigned i) {
  unsigned side = 2 * d - i;
  if (side > g.maxSide) {
    throw ca::ResourceError("matrix side " + std::to_string(side) + " for (d,i)=(" + std::to_string(d) + "," +
                            std::to_string(i) + ") exceeds --max-side " + std::to_string(g.maxSide));
  }
}

void requireRange(unsigned d, unsigned i) {
  if (d < 2 || i < 1 || i > d - 1) {
    throw ca::DomainError("need d >= 2 and 1 <= i <= d-1 (got d=" + std::to_string(d) + ", i=" + std::to_string(i) +
                          ")");
  }
}

// R_i over Z, served from the on-disk cache when present.
ca::MultiPoly integerResultant(const Globals& g, unsigned d, unsigned i, std::vector<std::string>* files) {
  requireRange(d, i);
  guardSide(g, d, i);
  const ca::Ring z = ca::Ring::integers();
  if (g.noCache) return ca::resultantRi(d, i, z);
  ca::ResultantCache cache = ca::ResultantCache::fromEnvironment();
  if (auto hit = cache.load(d, i, z)) return *hit;
  ca::MultiPoly r = ca::resultantRi(d, i, z);
  auto path = cache.store(d, i, r);
  if (files) files->push_back(path.string());
  return r;
}

void emit(const ca::RunReport& run, const Globals& g, long long elapsed) {
  ca::RunReport copy = run;
  copy.elapsedMs = g.noTiming ? 0 : elapsed;
  std::cout << copy.toJson().dump(2) << "\n";
}

// --- resultant --------------------------------------------------------------

struct ResultantArgs {
  unsigned d = 0, i = 0;
  std::optional<unsigned long> mod;
  std::string out;
};

int runResultant(const Globals& g, const ResultantArgs& a) {
  Timer timer;
  requireRange(a.d, a.i);
  std::vector<std::string> files;
  ca::MultiPoly r = integerResultant(g, a.d, a.i, &files);
  if (a.mod) {
    if (*a.mod < 2) throw ca::DomainError("--mod must be >= 2");
    r = ca::reduceMod(r, *a.mod);
    if (!g.noCache) files.push_back(ca::ResultantCache::fromEnvironment().store(a.d, a.i, r).string());
  }
  if (!a.out.empty()) {
    ca::writeFileAtomically(a.out, ca::formatPoly(r));
    files.push_back(a.out);
  }
  std::cout << "R_" << a.i << " for d=" << a.d << " over " << r.ring().tag() << ": " << r.termCount()
            << " monomials\n";
  if (!r.isZero()) {
    ca::DegreeProfile prof = ca::totalDegreeProfile(r);
    std::cout << "total degree: min " << prof.minDegree << ", max " << prof.maxDegree << "\n";
    std::cout << "monomials of minimal degree:";
    for (const auto& m : prof.monomialsAtMin)
      std::cout << " " << ca::MultiPoly::monomial(r.ring(), m.coefficient, m.exponents).toString();
    std::cout << "\n";
  }
  for (const auto& f : files) std::cout << "wrote " << f << "\n";
  if (!g.noTiming) std::cout << "elapsed_ms " << timer.elapsedMs() << "\n";
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::optional<unsigned> d, i, maxD;
  std::optional<unsigned long> mod;
};

void matrixClaims(ca::RunReport& run, unsigned d, unsigned i) {
  const ca::PolyMatrix m = ca::caMatrix(d, i);
  const std::string tag = "[d=" + std::to_string(d) + ",i=" + std::to_string(i) + "]";
  const unsigned n = 2 * d - i;
  const ca::MultiPoly target = ca::MultiPoly::variable(ca::Ring::integers(), d - 1, d - i);

  unsigned nonzero = 0;
  bool lastIsTarget = false;
  for (unsigned r = 0; r < n; ++r)
    if (!m.at(r, n - 1).isZero()) {
      ++nonzero;
      lastIsTarget = m.at(r, n - 1) == target;
    }
  run.claims.push_back({"matrix-last-column" + tag, nonzero == 1 && lastIsTarget,
                        "one nonzero entry, a" + std::to_string(d - i),
                        std::to_string(nonzero) + " nonzero entr" + (nonzero == 1 ? "y" : "ies")});

  bool ok = true;
  std::string actual = "as expected";
  for (unsigned c = 0; c < n; ++c) {
    unsigned count = 0;
    for (unsigned r = 0; r < n; ++r) count += m.at(r, c) == target;
    unsigned col = c + 1;
    unsigned want = col > n - i ? 1 : (col >= d - i + 1 && col <= 2 * d - 2 * i ? 2 : 0);
    if (count != want) {
      ok = false;
      actual = "column " + std::to_string(col) + " holds " + std::to_string(count);
      break;
    }
  }
  run.claims.push_back({"matrix-placement" + tag, ok,
                        "a" + std::to_string(d - i) + " once in each of the last i columns, twice in columns d-i+1..2d-2i",
                        actual});
}

int runVerify(const Globals& g, const VerifyArgs& a) {
  Timer timer;
  ca::RunReport run;
  run.command = "verify";
  unsigned lo, hi;
  if (a.maxD) {
    if (a.d) throw ca::DomainError("use either --d or --max-d");
    if (*a.maxD < 2) throw ca::DomainError("--max-d must be >= 2");
    lo = 2;
    hi = *a.maxD;
    run.params["max_d"] = hi;
  } else if (a.d) {
    lo = hi = *a.d;
    run.params["d"] = *a.d;
  } else {
    throw ca::DomainError("verify needs --d or --max-d");
  }
  if (a.i) {
    if (!a.d) throw ca::DomainError("--i requires --d");
    run.params["i"] = *a.i;
  }
  std::optional<ca::Ring> ring;
  if (a.mod) {
    if (*a.mod < 2) throw ca::DomainError("--mod must be >= 2");
    ring = ca::Ring::modulo(*a.mod);
    run.params["mod"] = *a.mod;
  }

  for (unsigned d = lo; d <= hi; ++d) {
    if (d < 2) throw ca::DomainError("d must be >= 2");
    unsigned iLo = a.i ? *a.i : 1, iHi = a.i ? *a.i : d - 1;
    for (unsigned i = iLo; i <= iHi; ++i) {
      requireRange(d, i);
      ca::MultiPoly r = integerResultant(g, d, i, &run.files);
      if (ring) r = ca::reduceMod(r, ring->modulus());
      ca::appendClaims(run, ca::checkTheorem(d, i, r));
      matrixClaims(run, d, i);
    }
  }
  emit(run, g, timer.elapsedMs());
  return run.allPass() ? 0 : kExitClaim;
}

// --- bad-primes -------------------------------------------------------------

struct BadPrimeArgs {
  std::optional<unsigned> d;
  std::string range;
  bool json = false;
  bool strict = false;
  std::uint64_t budget = 10'000'000;
};

int runBadPrimes(const Globals& g, const BadPrimeArgs& a) {
  Timer timer;
  unsigned lo, hi;
  if (a.d && !a.range.empty()) throw ca::DomainError("use either --d or --d-range");
  if (a.d) {
    lo = hi = *a.d;
  } else if (!a.range.empty()) {
    auto dots = a.range.find("..");
    if (dots == std::string::npos) throw ca::DomainError("--d-range expects A..B");
    try {
      lo = static_cast<unsigned>(std::stoul(a.range.substr(0, dots)));
      hi = static_cast<unsigned>(std::stoul(a.range.substr(dots + 2)));
    } catch (const std::logic_error&) {
      throw ca::DomainError("--d-range expects A..B");
    }
    if (lo > hi) throw ca::DomainError("--d-range is empty");
  } else {
    throw ca::DomainError("bad-primes needs --d or --d-range");
  }

  std::vector<ca::BadPrimeReport> reports;
  bool complete = true;
  for (unsigned d = lo; d <= hi; ++d) {
    reports.push_back(ca::badPrimes(d, a.budget));
    complete = complete && reports.back().complete;
  }

  if (a.json) {
    ca::RunReport run;
    run.command = "bad-primes";
    run.params["d_min"] = lo;
    run.params["d_max"] = hi;
    run.params["budget"] = a.budget;
    for (const auto& rep : reports) {
      run.findings.push_back(ca::toJson(rep));
      run.claims.push_back({"factorization-complete[d=" + std::to_string(rep.d) + "]", rep.complete || !a.strict,
                            "complete", rep.complete ? "complete" : "incomplete"});
    }
    emit(run, g, timer.elapsedMs());
  } else {
    for (const auto& rep : reports) {
      std::cout << "d=" << rep.d << " bad primes:";
      for (const auto& p : rep.badPrimes) std::cout << " " << p.get_str();
      std::cout << (rep.complete ? "  (complete)" : "  (INCOMPLETE)") << "\n";
      for (const auto& e : rep.perIndex) {
        if (e.i > rep.d / 2) break;
        std::cout << "  i=" << e.i << " C(d,i)-1 = " << e.value.get_str() << " =";
        if (e.factorization.empty() && !e.unfactoredCofactor) std::cout << " " << e.value.get_str();
        bool first = true;
        for (const auto& [p, m] : e.factorization) {
          std::cout << (first ? " " : " * ") << p.get_str() << (m > 1 ? "^" + std::to_string(m) : "");
          first = false;
        }
        if (e.unfactoredCofactor) std::cout << (first ? " " : " * ") << "[" << e.unfactoredCofactor->get_str() << "]";
        std::cout << "\n";
      }
    }
  }
  if (a.strict && !complete) return kExitResource;
  return 0;
}

// --- witness / search / ladder ---------------------------------------------

int runWitness(const Globals& g, unsigned d, unsigned i, std::uint64_t p) {
  Timer timer;
  ca::RunReport run;
  run.command = "witness";
  run.params = {{"d", d}, {"i", i}, {"p", p}};
  ca::CAWitness w = ca::corollaryWitness(d, i, p);
  run.claims.push_back({"corollary-witness[d=" + std::to_string(d) + ",i=" + std::to_string(i) +
                            ",p=" + std::to_string(p) + "]",
                        w.isCasasAlvero, "Casas-Alvero", w.isCasasAlvero ? "Casas-Alvero" : "not Casas-Alvero"});
  run.findings.push_back(ca::toJson(w));
  emit(run, g, timer.elapsedMs());
  return run.allPass() ? 0 : kExitClaim;
}

int runSearch(const Globals& g, unsigned d, std::uint64_t p, std::uint64_t cap, bool orbits) {
  Timer timer;
  ca::RunReport run;
  run.command = "search";
  run.params = {{"d", d}, {"p", p}, {"cap", cap}};
  auto results = ca::exhaustiveSearch(d, p, cap);
  bool hasTrivial = std::any_of(results.begin(), results.end(), [](const ca::CAWitness& w) { return w.isTrivial; });
  run.claims.push_back({"search-contains-x^d", hasTrivial, "x^" + std::to_string(d) + " present",
                        hasTrivial ? "present" : "absent"});
  std::size_t nontrivial = 0;
  for (const auto& w : results) {
    nontrivial += !w.isTrivial;
    run.findings.push_back(ca::toJson(w));
  }
  run.params["results"] = results.size();
  run.params["nontrivial"] = nontrivial;
  if (orbits) {
    ca::Json orbitJson = ca::Json::array();
    for (const auto& o : ca::groupScalingOrbits(results)) orbitJson.push_back(ca::toJson(o));
    run.params["orbits"] = std::move(orbitJson);
  }
  emit(run, g, timer.elapsedMs());
  return run.allPass() ? 0 : kExitClaim;
}

int runLadder(const Globals& g, const std::vector<std::string>& tables, unsigned bound, unsigned maxBase) {
  Timer timer;
  ca::RunReport run;
  run.command = "ladder";
  run.params = {{"tables", tables}, {"max", bound}};
  ca::GoodnessTable table;
  for (const auto& t : tables) {
    if (t == "default") {
      table.merge(ca::defaultGoodnessTable(maxBase));
    } else {
      std::ifstream in(t);
      if (!in) throw ca::DomainError("cannot read table file " + t);
      std::stringstream ss;
      ss << in.rdbuf();
      table.merge(ca::parseGoodnessTable(ss.str()));
    }
  }
  ca::CoverageReport rep = ca::ladderCoverage(table, bound);
  std::size_t total = rep.covered.size() + rep.blocked.size() + rep.undecided.size();
  run.claims.push_back({"ladder-partition", total == bound - 1, std::to_string(bound - 1) + " degrees",
                        std::to_string(total) + " degrees"});
  run.findings.push_back(ca::toJson(rep));
  emit(run, g, timer.elapsedMs());
  return run.allPass() ? 0 : kExitClaim;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resultants and bad primes for the Casas-Alvero conjecture"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-side", g.maxSide, "Largest Sylvester matrix side to evaluate")->capture_default_str();
  app.add_flag("--no-timing", g.noTiming, "Report elapsed_ms as 0 so output is byte-stable");
  app.add_flag("--no-cache", g.noCache, "Do not read or write the resultant cache");
  app.add_option("--threads", g.threads, "OpenMP thread count (default: runtime choice)");

  ResultantArgs ra;
  auto* res = app.add_subcommand("resultant", "Compute R_i = Res(f, H_i(f)) and write it in CA-POLY v1");
  res->alias("cmd-resultant");
  res->add_option("--d", ra.d)->required();
  res->add_option("--i", ra.i)->required();
  res->add_option("--mod", ra.mod, "Reduce modulo P");
  res->add_option("--out", ra.out, "Output file");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Check the structural claims about R_i; JSON report on stdout");
  ver->alias("cmd-verify");
  ver->add_option("--d", va.d);
  ver->add_option("--i", va.i);
  ver->add_option("--max-d", va.maxD);
  ver->add_option("--mod", va.mod, "Check the claims after reduction modulo P");

  BadPrimeArgs ba;
  auto* bad = app.add_subcommand("bad-primes", "Primes dividing C(d,i)-1");
  bad->alias("cmd-bad-primes");
  bad->add_option("--d", ba.d);
  bad->add_option("--d-range", ba.range, "A..B");
  bad->add_flag("--json", ba.json);
  bad->add_flag("--strict", ba.strict, "Exit 3 when a factorization is incomplete");
  bad->add_option("--budget", ba.budget, "Pollard rho iteration budget")->capture_default_str();

  unsigned wd = 0, wi = 0;
  std::uint64_t wp = 0;
  auto* wit = app.add_subcommand("witness", "Check x^d + x^{d-i} over F_p for p | C(d,i)-1");
  wit->alias("cmd-witness");
  wit->add_option("--d", wd)->required();
  wit->add_option("--i", wi)->required();
  wit->add_option("--p", wp)->required();

  unsigned sd = 0;
  std::uint64_t sp = 0, cap = ca::kDefaultSearchCap;
  bool orbits = false;
  auto* sea = app.add_subcommand("search", "All Casas-Alvero polynomials of degree d over F_p");
  sea->alias("cmd-search");
  sea->add_option("--d", sd)->required();
  sea->add_option("--p", sp)->required();
  sea->add_option("--cap", cap, "Maximum number of candidates")->capture_default_str();
  sea->add_flag("--orbits", orbits, "Also group results under x -> lambda x");

  std::vector<std::string> tables;
  unsigned bound = 0, maxBase = 7;
  auto* lad = app.add_subcommand("ladder", "Degrees reachable as d*p^l from good primes");
  lad->alias("cmd-ladder");
  lad->add_option("--table", tables, "'default' or a goodness table file; repeatable, merged in order")->required();
  lad->add_option("--max", bound)->required();
  lad->add_option("--max-base", maxBase, "Base degrees in the default table")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  if (g.threads > 0) omp_set_num_threads(g.threads);

  try {
    if (*res) return runResultant(g, ra);
    if (*ver) return runVerify(g, va);
    if (*bad) return runBadPrimes(g, ba);
    if (*wit) return runWitness(g, wd, wi, wp);
    if (*sea) return runSearch(g, sd, sp, cap, orbits);
    if (*lad) return runLadder(g, tables, bound, maxBase);
  } catch (const ca::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const ca::DomainError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ca::StructuralError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include "ca/bad_primes.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ca/error.hpp"
#include "ca/factor.hpp"
#include "ca/hasse.hpp"

namespace ca {

BadPrimeReport badPrimes(unsigned d, std::uint64_t budget) {
  if (d < 2) throw DomainError("bad primes need d >= 2");
  BadPrimeReport rep;
  rep.d = d;
  std::vector<IndexFactorization> half;
  std::set<mpz_class> primes;
  for (unsigned i = 1; i <= d / 2; ++i) {
    IndexFactorization entry;
    entry.i = i;
    entry.value = binomial(d, i) - 1;
    // C(d,i) >= d >= 2 on this range, so the value is at least 1.
    if (entry.value >= 2) {
      Factorization f = factorize(entry.value, budget);
      entry.factorization = f.factors;
      if (!f.complete()) {
        entry.unfactoredCofactor = f.cofactor;
        rep.complete = false;
      }
      for (const auto& [p, e] : f.factors) primes.insert(p);
    }
    half.push_back(std::move(entry));
  }
  for (unsigned i = 1; i <= d - 1; ++i) {
    IndexFactorization entry = half[std::min(i, d - i) - 1];
    entry.i = i;
    rep.perIndex.push_back(std::move(entry));
  }
  rep.badPrimes.assign(primes.begin(), primes.end());
  return rep;
}

PrimeStatus GoodnessTable::status(unsigned d, const mpz_class& p) const {
  auto it = entries.find(d);
  if (it == entries.end()) return PrimeStatus::Unknown;
  if (it->second.bad.count(p)) return PrimeStatus::Bad;
  if (it->second.allGood || it->second.good.count(p)) return PrimeStatus::Good;
  return PrimeStatus::Unknown;
}

void GoodnessTable::validate() const {
  for (const auto& [d, e] : entries) {
    if (d < 1) throw StructuralError("goodness table: degree must be >= 1");
    if (e.allGood && !e.bad.empty()) {
      throw StructuralError("goodness table: degree " + std::to_string(d) + " marks all primes good but lists bad ones");
    }
    for (const auto& p : e.good) {
      if (e.bad.count(p)) {
        throw StructuralError("goodness table: prime " + p.get_str() + " is both good and bad for degree " +
                              std::to_string(d));
      }
    }
    for (const auto* set : {&e.good, &e.bad})
      for (const auto& p : *set)
        if (!isProbablePrime(p)) throw StructuralError("goodness table: " + p.get_str() + " is not prime");
  }
}

void GoodnessTable::merge(const GoodnessTable& other) {
  for (const auto& [d, e] : other.entries) {
    GoodnessEntry& mine = entries[d];
    mine.allGood = mine.allGood || e.allGood;
    mine.good.insert(e.good.begin(), e.good.end());
    mine.bad.insert(e.bad.begin(), e.bad.end());
    if (!e.provenance.empty()) {
      mine.provenance = mine.provenance.empty() ? e.provenance : mine.provenance + "; " + e.provenance;
    }
  }
  validate();
}

GoodnessTable defaultGoodnessTable(unsigned maxBase) {
  GoodnessTable t;
  t.entries[1] = {true, {}, {}, "vacuous: degree 1"};
  if (maxBase >= 2) t.entries[2] = {true, {}, {}, "derived: R_1 = -a_1^2"};
  for (unsigned d = 3; d <= maxBase; ++d) {
    BadPrimeReport rep = badPrimes(d);
    GoodnessEntry e;
    e.bad.insert(rep.badPrimes.begin(), rep.badPrimes.end());
    e.provenance = "bad primes p | C(d,i)-1";
    t.entries[d] = std::move(e);
  }
  return t;
}

namespace {

std::set<mpz_class> parsePrimeList(const std::string& text, unsigned lineNo) {
  std::set<mpz_class> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    mpz_class p;
    if (item.empty() || p.set_str(item, 10) != 0 || p < 2) {
      throw StructuralError("goodness table line " + std::to_string(lineNo) + ": bad prime '" + item + "'");
    }
    out.insert(p);
  }
  return out;
}

std::string joinPrimes(const std::set<mpz_class>& primes) {
  std::string out;
  for (const auto& p : primes) out += (out.empty() ? "" : ",") + p.get_str();
  return out;
}

}  // namespace

GoodnessTable parseGoodnessTable(const std::string& text) {
  GoodnessTable table;
  std::istringstream in(text);
  std::string line;
  unsigned lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string source;
    auto src = line.find("source=");
    if (src != std::string::npos) {
      source = line.substr(src + 7);
      line.erase(src);
      while (!source.empty() && std::isspace(static_cast<unsigned char>(source.back()))) source.pop_back();
    }
    std::istringstream fields(line);
    std::string field;
    std::optional<unsigned> degree;
    GoodnessEntry entry;
    entry.provenance = source;
    bool any = false;
    while (fields >> field) {
      any = true;
      auto eq = field.find('=');
      if (eq == std::string::npos) {
        throw StructuralError("goodness table line " + std::to_string(lineNo) + ": expected key=value, got '" +
                              field + "'");
      }
      std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      if (key == "degree") {
        try {
          std::size_t used = 0;
          unsigned long v = std::stoul(value, &used);
          if (used != value.size() || v < 1 || v > 1'000'000) throw std::invalid_argument(value);
          degree = static_cast<unsigned>(v);
        } catch (const std::logic_error&) {
          throw StructuralError("goodness table line " + std::to_string(lineNo) + ": bad degree '" + value + "'");
        }
      } else if (key == "good") {
        if (value == "*") {
          entry.allGood = true;
        } else {
          entry.good = parsePrimeList(value, lineNo);
        }
      } else if (key == "bad") {
        entry.bad = parsePrimeList(value, lineNo);
      } else {
        throw StructuralError("goodness table line " + std::to_string(lineNo) + ": unknown key '" + key + "'");
      }
    }
    if (!any) {
      if (!source.empty()) throw StructuralError("goodness table line " + std::to_string(lineNo) + ": missing degree");
      continue;
    }
    if (!degree) throw StructuralError("goodness table line " + std::to_string(lineNo) + ": missing degree");
    GoodnessTable single;
    single.entries[*degree] = std::move(entry);
    table.merge(single);
  }
  table.validate();
  return table;
}

std::string formatGoodnessTable(const GoodnessTable& table) {
  std::ostringstream os;
  for (const auto& [d, e] : table.entries) {
    os << "degree=" << d << " good=" << (e.allGood ? std::string("*") : joinPrimes(e.good))
       << " bad=" << joinPrimes(e.bad) << " source=" << e.provenance << "\n";
  }
  return os.str();
}

std::string statusName(PrimeStatus s) {
  switch (s) {
    case PrimeStatus::Good:
      return "good";
    case PrimeStatus::Bad:
      return "bad";
    case PrimeStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

// m = p^l with l >= 1; returns {p, l} or {0, 0}.
std::pair<unsigned, unsigned> primePower(unsigned m) {
  if (m < 2) return {0, 0};
  unsigned p = 2;
  while (p * p <= m && m % p) ++p;
  if (m % p) p = m;
  unsigned l = 0;
  while (m % p == 0) {
    m /= p;
    ++l;
  }
  return m == 1 ? std::make_pair(p, l) : std::make_pair(0u, 0u);
}

}  // namespace

CoverageReport ladderCoverage(const GoodnessTable& table, unsigned bound) {
  if (bound < 2) throw DomainError("ladder bound must be >= 2");
  if (table.entries.empty()) throw StructuralError("goodness table is empty");
  table.validate();

  CoverageReport rep;
  rep.bound = bound;
  for (unsigned m = 2; m <= bound; ++m) {
    if (table.entries.count(m)) {
      rep.covered[m] = {m, 0, 0};
      continue;
    }
    std::vector<Decomposition> decomps;
    for (const auto& [d, entry] : table.entries) {
      if (d >= m || m % d) continue;
      auto [p, l] = primePower(m / d);
      if (l == 0) continue;
      decomps.push_back({d, p, l, table.status(d, p)});
    }
    auto good = std::find_if(decomps.begin(), decomps.end(),
                             [](const Decomposition& x) { return x.status == PrimeStatus::Good; });
    if (good != decomps.end()) {
      rep.covered[m] = {good->d, good->p, good->l};
    } else if (std::any_of(decomps.begin(), decomps.end(),
                           [](const Decomposition& x) { return x.status == PrimeStatus::Unknown; })) {
      rep.undecided[m] = std::move(decomps);
    } else {
      rep.blocked[m] = std::move(decomps);
    }
  }
  return rep;
}

}  // namespace ca

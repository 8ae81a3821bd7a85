#include "ca/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "ca/error.hpp"
#include "ca/poly_format.hpp"

namespace ca {

ResultantCache::ResultantCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

ResultantCache ResultantCache::fromEnvironment() {
  const char* env = std::getenv("CA_CACHE_DIR");
  return ResultantCache(env && *env ? std::filesystem::path(env) : std::filesystem::path("ca-cache"));
}

std::filesystem::path ResultantCache::pathFor(unsigned d, unsigned i, const Ring& ring) const {
  return dir_ / ("R_d" + std::to_string(d) + "_i" + std::to_string(i) + "_" + ring.tag() + ".capoly");
}

std::optional<MultiPoly> ResultantCache::load(unsigned d, unsigned i, const Ring& ring) const {
  std::ifstream in(pathFor(d, i, ring), std::ios::binary);
  if (!in) return std::nullopt;
  MultiPoly p = readPoly(in);
  if (!(p.ring() == ring) || p.varCount() != d - 1) {
    throw StructuralError("cache file " + pathFor(d, i, ring).string() + " does not match its key");
  }
  return p;
}

std::filesystem::path ResultantCache::store(unsigned d, unsigned i, const MultiPoly& r) const {
  std::filesystem::create_directories(dir_);
  auto path = pathFor(d, i, r.ring());
  writeFileAtomically(path, formatPoly(r));
  return path;
}

void writeFileAtomically(const std::filesystem::path& target, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
         << counter++;
  std::filesystem::path tmp = target;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace ca

#pragma once

#include <filesystem>
#include <optional>

#include "ca/multipoly.hpp"

namespace ca {

/// On-disk store of R_i in CA-POLY v1, one file per (d, i, ring).
/// Writes go to a temporary file that is renamed into place, so concurrent
/// writers of the same key leave one complete file.
class ResultantCache {
 public:
  explicit ResultantCache(std::filesystem::path dir);
  /// $CA_CACHE_DIR, or ./ca-cache.
  static ResultantCache fromEnvironment();

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path pathFor(unsigned d, unsigned i, const Ring& ring) const;

  std::optional<MultiPoly> load(unsigned d, unsigned i, const Ring& ring) const;
  std::filesystem::path store(unsigned d, unsigned i, const MultiPoly& r) const;

 private:
  std::filesystem::path dir_;
};

/// Writes through a temporary sibling and renames it over `target`.
void writeFileAtomically(const std::filesystem::path& target, const std::string& content);

}  // namespace ca

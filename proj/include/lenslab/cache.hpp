#pragma once

// On-disk cache of d-tables and Casson-Walker values.
//
// JSON-lines file. The first line is the schema header
//   {"schema":"lenslab-cache","version":1}
// and every following line is one lens space:
//   {"p":7,"q":2,"lambda":"-1/14","d":["-9/14",...]}
//
// Entries are re-verified on load: lambda must equal lambda_cf(p, q) and the
// d-values must sum to p * lambda. Entries failing either check are dropped.

#include <cstddef>
#include <filesystem>
#include <string>

#include "lenslab/d_invariant.hpp"

namespace lenslab::cli {

struct CacheLoadStats {
  std::size_t loaded = 0;
  std::size_t discarded = 0;
  bool header_ok = true;
};

class ResultCache {
 public:
  static constexpr int kSchemaVersion = 1;
  static constexpr const char* kSchemaName = "lenslab-cache";

  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }

  /// Missing file loads nothing. A bad header discards the whole file.
  CacheLoadStats load_into(DMemo& memo) const;

  /// Rewrites the file with every table in `memo`, ordered by (p, q).
  void save(const DMemo& memo) const;

 private:
  std::filesystem::path path_;
};

}  // namespace lenslab::cli

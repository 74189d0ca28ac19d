#pragma once

#include <cstdint>
#include <string>

#include "depthlab/chartab.hpp"
#include "depthlab/group.hpp"

namespace depthlab {

// On-disk character-table cache.  One JSON file per (group, prime) pair,
// keyed by a canonical hash of the sorted element list; writes are atomic
// (temp file + rename).  An empty directory string disables caching.

inline constexpr const char* kCacheEnvVar = "DEPTHLAB_CACHE";

// DEPTHLAB_CACHE if set, else ./.depthlab-cache.
std::string default_cache_dir();

std::string canonical_group_hash(const FiniteGroup& g);

// Loads the table from the cache when a valid entry exists, else computes it
// and stores the result.  Cache entries failing validation are recomputed and
// overwritten.
CharTableModP dixon_table_cached(const FiniteGroup& g, const ConjugacyData& classes,
                                 const PrimeContext& context, const std::string& cache_dir);

struct CacheStats {
  std::uint64_t files = 0;
  std::uint64_t bytes = 0;
};

CacheStats cache_stats(const std::string& cache_dir);
std::uint64_t cache_clear(const std::string& cache_dir);

}  // namespace depthlab

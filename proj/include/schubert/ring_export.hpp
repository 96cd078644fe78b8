#pragma once

// Full multiplication tables of A*(G(k,n)) as JSON, and loading such a table
// back into a ProductCache.

#include <string>

#include "schubert/chow.hpp"
#include "schubert/json_io.hpp"

namespace schubert {

inline constexpr int kDefaultExportCap = 16;

/// {"k","n","basis":{"<codim>":[partitions]},"products":[{"a","b","terms"}]}
/// over unordered pairs of basis classes. Throws DomainError when k(n-k) > cap.
Json export_ring(const GrassCtx& ctx, int cap = kDefaultExportCap, ProductCache* cache = nullptr);

/// Loads every product of an exported table into `cache` and returns its context.
GrassCtx import_ring(const Json& table, ProductCache& cache);

/// File name used inside a cache directory, e.g. "G2_4.json".
std::string ring_file_name(const GrassCtx& ctx);

/// Fills `cache` from `dir` if a table for ctx is there; returns whether it was.
bool load_cached_ring(const std::string& dir, const GrassCtx& ctx, ProductCache& cache);

}  // namespace schubert

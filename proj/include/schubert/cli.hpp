#pragma once

// The command-line front end. Lives in the library so the report runner and
// the tests can drive it without spawning a process.

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNegative = 3;
inline constexpr int kExitConsistency = 4;

/// `args` excludes the program name. JSON goes to `out`, diagnostics to `err`.
/// The product-cache directory is read from SCHUBERT_CACHE_DIR.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert

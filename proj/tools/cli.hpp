#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace msf::cli {

enum class Format { kDefault, kJson, kCsv, kText };

/// Settings shared by every subcommand. Defaults come first, then the
/// MSF_* environment variables, then command-line flags.
struct RunConfig {
  std::string group;
  std::string command;
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 300.0;
  unsigned threads = 1;
  Format format = Format::kDefault;
  std::uint64_t seed = 1;
  bool timings = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics (and partial results on budget exhaustion) to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace msf::cli

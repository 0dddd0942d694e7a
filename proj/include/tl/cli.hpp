#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace tl {

enum class OutputFormat { text, json, ascii };

struct Config {
  int max_n = 8;
  /// Empty when the disk cache is disabled.
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat output = OutputFormat::text;
  int series_order = 0;
};

/// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnv = "TLCALC_CACHE_DIR";

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitBadInput = 2,
  kExitBounds = 3,
  kExitIo = 4,
};

/// Entry point of `tlcalc`; writes results to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tl

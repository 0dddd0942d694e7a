#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "tl/errors.hpp"
#include "tl/projectors.hpp"

namespace tl {

class CacheIoError : public Error {
 public:
  using Error::Error;
};

/// One JSON file per key:
///   {"format": "tl-projector-cache", "version": 1, "key": ..., "morphism": ...}
/// Writes go to a temporary file that is renamed into place. Entries with a
/// different version, or that fail validation, are treated as missing.
class DiskCache : public CacheBacking {
 public:
  static constexpr int kVersion = 1;

  explicit DiskCache(std::filesystem::path dir);

  std::optional<Morphism> load(const std::string& key) override;
  /// Throws CacheIoError when the directory or file cannot be written.
  void store(const std::string& key, const Morphism& value) override;

  struct Stats {
    std::size_t jw = 0;
    std::size_t peps = 0;
    std::size_t files = 0;
    std::uintmax_t bytes = 0;
  };
  Stats stat() const;
  /// Removes every cache entry; returns how many files were deleted.
  std::size_t clear();

  const std::filesystem::path& dir() const { return dir_; }
  static std::string file_name(const std::string& key);

 private:
  std::filesystem::path dir_;
};

}  // namespace tl

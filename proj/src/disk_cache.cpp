#include "tl/disk_cache.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "tl/serialize.hpp"

namespace tl {

namespace fs = std::filesystem;

namespace {

constexpr const char* kFormat = "tl-projector-cache";

bool is_entry(const fs::path& p) {
  const std::string name = p.filename().string();
  const bool ours = name.rfind("jw_", 0) == 0 || name.rfind("peps_", 0) == 0;
  return ours && (p.extension() == ".json" || p.extension() == ".tmp");
}

}  // namespace

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

std::string DiskCache::file_name(const std::string& key) {
  std::string out;
  for (char c : key) {
    switch (c) {
      case ':':
      case ',': out += '_'; break;
      case '(':
      case ')': break;
      case '-': out += 'm'; break;
      default: out += c;
    }
  }
  return out + ".json";
}

std::optional<Morphism> DiskCache::load(const std::string& key) {
  std::ifstream in(dir_ / file_name(key));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.value("format", "") != kFormat || doc.value("version", 0) != kVersion ||
        doc.value("key", "") != key) {
      return std::nullopt;
    }
    return morphism_from_json(doc.at("morphism"));
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

void DiskCache::store(const std::string& key, const Morphism& value) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw CacheIoError("cache: cannot create " + dir_.string() + ": " + ec.message());
  const nlohmann::json doc = {
      {"format", kFormat}, {"version", kVersion}, {"key", key}, {"morphism", to_json(value)}};
  const fs::path target = dir_ / file_name(key);
  std::random_device rd;
  fs::path tmp = target;
  tmp += "." + std::to_string(rd()) + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump() << "\n";
    if (!out) throw CacheIoError("cache: cannot write " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CacheIoError("cache: cannot rename into " + target.string());
  }
}

DiskCache::Stats DiskCache::stat() const {
  Stats s;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return s;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json" || !is_entry(entry.path())) {
      continue;
    }
    const std::string name = entry.path().filename().string();
    ++s.files;
    s.bytes += entry.file_size();
    if (name.rfind("jw_", 0) == 0) ++s.jw;
    if (name.rfind("peps_", 0) == 0) ++s.peps;
  }
  if (ec) throw CacheIoError("cache: cannot list " + dir_.string() + ": " + ec.message());
  return s;
}

std::size_t DiskCache::clear() {
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  std::vector<fs::path> doomed;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (entry.is_regular_file() && is_entry(entry.path())) doomed.push_back(entry.path());
  }
  if (ec) throw CacheIoError("cache: cannot list " + dir_.string() + ": " + ec.message());
  for (const auto& p : doomed) {
    if (!fs::remove(p, ec) || ec) throw CacheIoError("cache: cannot remove " + p.string());
  }
  return doomed.size();
}

}  // namespace tl

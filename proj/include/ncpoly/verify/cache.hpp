#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace ncpoly::verify {

inline constexpr const char* kCacheDirEnv = "NCPOLY_CACHE_DIR";

std::string sha256_hex(std::string_view data);

/// Content-addressed JSON store. Entry files are <sha256(key)>.json holding
/// {key, hash, payload} with hash = sha256(payload.dump()).
class Cache {
 public:
  // Creates the directory when missing. Warnings go to `warn` (std::cerr when null).
  explicit Cache(std::filesystem::path dir, std::ostream* warn = nullptr);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  void store(const std::string& key, const nlohmann::json& payload) const;
  // nullopt when missing; a corrupt or mismatched entry also gives nullopt,
  // with a warning.
  std::optional<nlohmann::json> load(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  std::ostream* warn_;
};

// --cache-dir wins, then $NCPOLY_CACHE_DIR; no caching otherwise.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

// load(key), or compute() followed by store(key, ...). A null cache just computes.
nlohmann::json cached(const Cache* cache, const std::string& key,
                      const std::function<nlohmann::json()>& compute);

}  // namespace ncpoly::verify

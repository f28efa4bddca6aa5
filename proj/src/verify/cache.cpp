#include "ncpoly/verify/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ncpoly::verify {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Cache::Cache(fs::path dir, std::ostream* warn) : dir_(std::move(dir)), warn_(warn ? warn : &std::cerr) {
  fs::create_directories(dir_);
}

fs::path Cache::path_for(const std::string& key) const { return dir_ / (sha256_hex(key) + ".json"); }

void Cache::store(const std::string& key, const json& payload) const {
  const json entry = {{"key", key}, {"hash", sha256_hex(payload.dump())}, {"payload", payload}};
  // write beside the target, then rename, so concurrent readers never see half a file
  static std::atomic<unsigned long> counter{0};
  std::ostringstream tmp_name;
  tmp_name << path_for(key).filename().string() << ".tmp." << std::this_thread::get_id() << "." << counter++;
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary);
    out << entry.dump();
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
  }
  fs::rename(tmp, path_for(key));
}

std::optional<json> Cache::load(const std::string& key) const {
  const fs::path p = path_for(key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  const json entry = json::parse(text.str(), nullptr, false);
  if (entry.is_discarded() || !entry.is_object() || !entry.contains("payload") ||
      entry.value("key", json()) != json(key) || !entry.contains("hash")) {
    *warn_ << "warning: corrupt cache entry " << p.string() << ", recomputing\n";
    return std::nullopt;
  }
  if (entry["hash"] != json(sha256_hex(entry["payload"].dump()))) {
    *warn_ << "warning: hash mismatch in cache entry " << p.string() << ", recomputing\n";
    return std::nullopt;
  }
  return entry["payload"];
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return fs::path(env);
  return std::nullopt;
}

json cached(const Cache* cache, const std::string& key, const std::function<json()>& compute) {
  if (cache) {
    if (auto hit = cache->load(key)) return *hit;
  }
  json value = compute();
  if (cache) cache->store(key, value);
  return value;
}

}  // namespace ncpoly::verify

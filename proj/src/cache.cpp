#include "kostant/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

#include "kostant/error.hpp"

namespace kostant {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> Cache::from_environment() {
  const char* v = std::getenv("KOSTANT_CACHE_DIR");
  if (!v || !*v) return std::nullopt;
  return std::filesystem::path(v);
}

std::string Cache::make_key(const std::string& diagram, const std::string& operation, const std::string& convention) {
  const nlohmann::json j = {{"schema", kCacheSchemaVersion}, {"diagram", diagram}, {"operation", operation}, {"convention", convention}};
  return sha256_hex(j.dump());
}

std::filesystem::path Cache::path_of(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> Cache::load(const std::string& key) const {
  std::ifstream in(path_of(key));
  if (!in) return std::nullopt;
  const nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("schema", -1) != kCacheSchemaVersion || j.value("key", "") != key) return std::nullopt;
  auto it = j.find("payload");
  if (it == j.end() || !it->is_string()) return std::nullopt;
  return it->get<std::string>();
}

void Cache::store(const std::string& key, const std::string& diagram, const std::string& operation, const std::string& payload) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream created;
  created << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  const nlohmann::json j = {{"schema", kCacheSchemaVersion}, {"key", key},         {"operation", operation},
                            {"diagram", diagram},            {"created", created.str()}, {"payload", payload}};
  std::random_device rd;
  const auto tmp = dir_ / (key + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp.string());
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path_of(key), ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot write cache entry " + path_of(key).string());
  }
}

}  // namespace kostant

#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace kostant {

/// Bumping this invalidates every cache entry; old entries are ignored, never migrated.
inline constexpr int kCacheSchemaVersion = 1;

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

/// On-disk store of computed outputs keyed by a content hash. One entry is a
/// versioned JSON file {schema, key, operation, diagram, created, payload}.
class Cache {
public:
  explicit Cache(std::filesystem::path dir);

  /// $KOSTANT_CACHE_DIR when set and nonempty.
  static std::optional<std::filesystem::path> from_environment();

  static std::string make_key(const std::string& diagram, const std::string& operation, const std::string& convention);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_of(const std::string& key) const;

  /// Payload of an entry; nullopt when absent, unreadable or of another schema.
  std::optional<std::string> load(const std::string& key) const;
  /// Writes through a temporary file and a rename so concurrent writers of
  /// the same key leave one complete entry.
  void store(const std::string& key, const std::string& diagram, const std::string& operation, const std::string& payload) const;

private:
  std::filesystem::path dir_;
};

}  // namespace kostant

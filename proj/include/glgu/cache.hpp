#pragma once

// On-disk cache: enumerated groups (binary), GU2 class labels and character
// tables (JSON). A damaged or mismatched entry is rebuilt with a warning.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "glgu/chartab.hpp"
#include "glgu/classify.hpp"
#include "glgu/group.hpp"

namespace glgu::cache {

inline constexpr std::uint32_t kGroupFormatVersion = 1;
inline constexpr const char* kEnvVar = "GLGU_CACHE_DIR";

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The explicit directory if non-empty, else $GLGU_CACHE_DIR, else no cache.
std::optional<std::filesystem::path> resolve_dir(const std::string& flag);

/// 64-bit FNV-1a, used for cache keys and the group checksum.
std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t h = 0xcbf29ce484222325ULL);

/// Hex digest of the artifact-relevant configuration.
std::string key(const GroupSpec& spec, std::optional<std::uint64_t> seed = std::nullopt);

void write_group(const std::filesystem::path& file, const Group& G);
/// Throws CacheError on any header, checksum or membership mismatch.
Group read_group(const std::filesystem::path& file, const GroupSpec& spec);

class Store {
 public:
  explicit Store(std::optional<std::filesystem::path> dir = std::nullopt) : dir_(std::move(dir)) {}

  const std::optional<std::filesystem::path>& dir() const { return dir_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  Group group(const GroupSpec& spec, std::uint64_t budget = kDefaultBudget, Exec exec = Exec::Parallel);
  GU2Classifier gu2_labels(const Group& G, const ClassPartition& P);
  /// Dixon output plus indicators; restriction types and tangibility are not stored.
  CharTable character_table(const Group& G, const ClassData& data, std::uint64_t seed);

  std::filesystem::path path_for(const GroupSpec& spec, const std::string& suffix,
                                 std::optional<std::uint64_t> seed = std::nullopt) const;

 private:
  void warn(const std::string& what) { warnings_.push_back(what); }
  void write_text(const std::filesystem::path& file, const std::string& text);

  std::optional<std::filesystem::path> dir_;
  std::vector<std::string> warnings_;
};

}  // namespace glgu::cache

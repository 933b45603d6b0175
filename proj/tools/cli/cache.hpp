#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "schubert/weyl.hpp"

namespace schubert::cli {

inline constexpr const char* kCacheEnv = "SCHUBERT_CACHE_DIR";

/// On-disk results keyed by (kind, group, library version). Writes go to a
/// temporary file that is then renamed over the target.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path root) : root_(std::move(root)) {}

  /// The directory given on the command line, else the environment
  /// variable, else no cache.
  static std::optional<ResultCache> resolve(const std::string& flag);

  std::filesystem::path entry(std::string_view kind, GroupSpec group) const;
  std::optional<std::string> load(std::string_view kind, GroupSpec group) const;
  void store(std::string_view kind, GroupSpec group, std::string_view content) const;

 private:
  std::filesystem::path root_;
};

}  // namespace schubert::cli

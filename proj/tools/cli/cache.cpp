#include "cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "schubert/errors.hpp"
#include "schubert/version.hpp"

namespace schubert::cli {

std::optional<ResultCache> ResultCache::resolve(const std::string& flag) {
  if (!flag.empty()) return ResultCache(flag);
  if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') {
    return ResultCache(env);
  }
  return std::nullopt;
}

std::filesystem::path ResultCache::entry(std::string_view kind, GroupSpec group) const {
  return root_ / (std::string(kind) + "-" + to_string(group) + "-v" + kVersion + ".json");
}

std::optional<std::string> ResultCache::load(std::string_view kind, GroupSpec group) const {
  std::ifstream in(entry(kind, group), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void ResultCache::store(std::string_view kind, GroupSpec group,
                        std::string_view content) const {
  const auto target = entry(kind, group);
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) throw Error("cannot create cache directory " + root_.string() + ": " + ec.message());
  auto temp = target;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("cannot write cache file " + temp.string());
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw Error("cannot replace cache file " + target.string() + ": " + ec.message());
  }
}

}  // namespace schubert::cli

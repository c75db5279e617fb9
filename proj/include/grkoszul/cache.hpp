#pragma once
#include <cstdint>
#include <optional>
#include <string>

namespace grk {

std::uint64_t fnv1a(const std::string& s);

// Content-addressed text store. The directory is GRKOSZUL_CACHE_DIR when
// set, else $XDG_CACHE_HOME/grkoszul, else ~/.cache/grkoszul.
class TextCache {
 public:
  TextCache();
  explicit TextCache(std::string dir) : dir_(std::move(dir)) {}
  const std::string& dir() const { return dir_; }
  std::optional<std::string> get(const std::string& key) const;
  // Failures to write are ignored: the cache is an optimization only.
  void put(const std::string& key, const std::string& value) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace grk

#include "grkoszul/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace grk {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

TextCache::TextCache() {
  if (const char* d = std::getenv("GRKOSZUL_CACHE_DIR"); d && *d) {
    dir_ = d;
  } else if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) {
    dir_ = std::string(x) + "/grkoszul";
  } else if (const char* h = std::getenv("HOME"); h && *h) {
    dir_ = std::string(h) + "/.cache/grkoszul";
  } else {
    dir_ = ".grkoszul-cache";
  }
}

std::string TextCache::path_for(const std::string& key) const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return dir_ + "/" + buf + ".txt";
}

std::optional<std::string> TextCache::get(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string first;
  if (!std::getline(in, first) || first != key) return std::nullopt;  // collision or stale
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void TextCache::put(const std::string& key, const std::string& value) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  const std::string path = path_for(key);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << key << "\n" << value;
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace grk

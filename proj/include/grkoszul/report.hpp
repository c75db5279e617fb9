#pragma once
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

namespace grk {

inline constexpr const char* kVersion = "0.1.0";

// Line-oriented report: `key=value` lines and `#` comments, nothing else.
class Report {
 public:
  explicit Report(const std::string& command);

  void param(const std::string& key, const std::string& value);
  void comment(const std::string& text);
  void kv(const std::string& key, const std::string& value);
  void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
  template <typename T>
    requires std::is_integral_v<T>
  void kv(const std::string& key, T value) {
    kv(key, std::to_string(value));
  }
  void append(const Report& other);  // body lines only

  std::string str() const;
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  std::vector<std::string> header_, lines_;
};

template <typename T>
std::string join(const std::vector<T>& v, const std::string& sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    if constexpr (std::is_convertible_v<T, std::string>)
      s += v[i];
    else
      s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace grk

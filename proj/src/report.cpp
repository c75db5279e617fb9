#include "grkoszul/report.hpp"

#include "grkoszul/errors.hpp"

namespace grk {

namespace {

// values must stay on one line
std::string one_line(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == '\n' || c == '\r') c = ' ';
  return out;
}

}  // namespace

Report::Report(const std::string& command) {
  header_.push_back(std::string("# grkoszul ") + kVersion);
  header_.push_back("# command=" + command);
}

void Report::param(const std::string& key, const std::string& value) {
  header_.push_back("# param " + key + "=" + one_line(value));
}

void Report::comment(const std::string& text) { lines_.push_back("# " + one_line(text)); }

void Report::kv(const std::string& key, const std::string& value) {
  check_invariant(!key.empty() && key.find('=') == std::string::npos && key[0] != '#', "malformed report key");
  lines_.push_back(key + "=" + one_line(value));
}

void Report::append(const Report& other) { lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end()); }

std::string Report::str() const {
  std::string s;
  for (const auto& l : header_) s += l + "\n";
  for (const auto& l : lines_) s += l + "\n";
  return s;
}

}  // namespace grk

#pragma once
#include <stdexcept>
#include <string>

namespace grk {

// Exit status mapping used by the command line tool.
enum class ErrorKind { input = 2, hypothesis = 3, invariant = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed input: parse failures, mismatched dimensions, unknown labels.
struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorKind::input, w) {}
};

// A mathematical precondition does not hold for the supplied data.
struct HypothesisError : Error {
  explicit HypothesisError(const std::string& w) : Error(ErrorKind::hypothesis, w) {}
};

// An internal consistency check failed. Always a bug.
struct InvariantError : Error {
  explicit InvariantError(const std::string& w) : Error(ErrorKind::invariant, w) {}
};

inline void check_invariant(bool ok, const char* what) {
  if (!ok) throw InvariantError(what);
}

}  // namespace grk

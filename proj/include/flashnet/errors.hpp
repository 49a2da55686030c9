#pragma once

#include <stdexcept>
#include <string>

namespace flashnet {

// Error categories map to CLI exit codes and to the machine-parseable
// "error: <category>: <message>" line printed on failure.
enum class ErrorCategory {
  usage,    // bad flags / arguments
  io,       // unreadable or unwritable files
  format,   // malformed file contents (codec, manifest, checkpoint)
  config,   // inconsistent configuration (shapes, sigmas, splits)
  numeric,  // non-finite values where finite ones are required
};

const char* to_string(ErrorCategory c);
int exit_code(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory c, const std::string& message) {
  throw Error(c, message);
}

}  // namespace flashnet

#pragma once

#include <stdexcept>
#include <string>

namespace qqg {

// Every recoverable failure is thrown as a qqg::Error carrying a stable
// machine-readable code ("NotGenerating", "OrderMismatch", ...) so the CLI
// can map it to an exit status and tests can assert on it.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qqg

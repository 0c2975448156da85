#pragma once

#include <stdexcept>
#include <string>

namespace proofforge {

// Every failure the library reports carries a short machine code
// ("syntax", "budget", ...) so the CLI can print `error: <code>: <msg>`.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace proofforge

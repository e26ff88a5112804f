#pragma once

#include <stdexcept>
#include <string>

namespace mcb {

// Raised when a run configuration fails validation (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a check subcommand finds disagreement beyond tolerance
// (CLI exit code 3).
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcb

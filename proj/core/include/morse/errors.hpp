#pragma once

#include <stdexcept>
#include <string>

namespace morse {

// Invalid user input: bad parameters, malformed config, out-of-range
// quantum numbers. The CLI maps this to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  // Name of the offending field, empty when the error is not field-specific.
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Floating-point or resource limits hit during a computation (overflow,
// energy drift, memory budget). The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace morse

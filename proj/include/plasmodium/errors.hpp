#pragma once

#include <stdexcept>
#include <string>

namespace plasmodium {

/// Invalid configuration, parameters or geometry. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// File system or stream failure. Maps to CLI exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A checked simulation invariant did not hold.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace plasmodium

#pragma once

#include <stdexcept>
#include <string>

namespace mgrow {

// Bad shapes, modes, or arguments. Maps to CLI exit code 1.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Invalid or inconsistent run configuration. Maps to CLI exit code 1.
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Non-finite losses/gradients, divergence, failed numeric contracts. Exit code 2.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// File format and filesystem failures. Exit code 3.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mgrow

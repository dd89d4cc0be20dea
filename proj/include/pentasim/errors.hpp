#pragma once

#include <stdexcept>
#include <string>

namespace pentasim {

// Bad arguments or state that violates a documented precondition.
struct InvalidInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical failure (singular system, degenerate null space, ...).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Config file problems: parse errors and schema violations.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pentasim

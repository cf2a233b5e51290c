#pragma once

#include <stdexcept>
#include <string>

namespace cvdqs {

// Raised for malformed or self-contradictory scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a well-formed problem has no admissible solution, e.g. a
// squeezing/anti-squeezing pair that no source efficiency in (0, 1] explains.
class NoSolutionError : public std::runtime_error {
 public:
  explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an estimator cannot be built because an active sensor has zero
// signal gain (zero amplitude, zero field, or a transduction null).
class DegenerateEstimatorError : public std::runtime_error {
 public:
  explicit DegenerateEstimatorError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cvdqs

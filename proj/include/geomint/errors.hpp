#pragma once

#include <stdexcept>
#include <string>

namespace geomint {

// Retraction/logarithm argument outside the injectivity domain.
class OutOfDomainError : public std::runtime_error {
 public:
  explicit OutOfDomainError(const std::string& what) : std::runtime_error(what) {}
};

// Implicit solver failed to reach the requested tolerance.
class SolverDivergedError : public std::runtime_error {
 public:
  SolverDivergedError(const std::string& what, double residual_norm, int iterations)
      : std::runtime_error(what), residual_norm(residual_norm), iterations(iterations) {}

  double residual_norm;
  int iterations;
};

// Invalid or inconsistent run configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geomint

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace geomint {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double tolerance = 0.0;
};

// Suites mirror the library modules: algebra, bundles, tulczyjew,
// retraction, lifts, integrators.
std::vector<std::string> check_suite_names();

// Runs one suite (throws std::invalid_argument for unknown names) or all of
// them. Results are deterministic for a fixed seed.
std::vector<CheckResult> run_check_suite(const std::string& suite, std::uint64_t seed);
std::vector<CheckResult> run_all_checks(std::uint64_t seed);

// GEOMINT_SEED environment variable when set, otherwise a fixed default.
std::uint64_t default_check_seed();

}  // namespace geomint

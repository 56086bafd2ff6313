#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geomint/checks.hpp"
#include "geomint/config.hpp"
#include "geomint/errors.hpp"
#include "geomint/simulate.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitDomain = 4;
constexpr int kExitCheckFailed = 5;

std::vector<double> parse_step_list(const std::string& text) {
  std::vector<double> steps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw geomint::ConfigError("empty entry in --steps list");
    std::size_t used = 0;
    double value = std::stod(item, &used);
    if (used != item.size()) {
      throw geomint::ConfigError("invalid step size '" + item + "' in --steps list");
    }
    steps.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return steps;
}

int run_checks(const std::string& suite) {
  std::vector<geomint::CheckResult> results;
  std::uint64_t seed = geomint::default_check_seed();
  if (suite == "all") {
    results = geomint::run_all_checks(seed);
  } else {
    try {
      results = geomint::run_check_suite(suite, seed);
    } catch (const std::invalid_argument&) {
      std::string valid;
      for (const std::string& name : geomint::check_suite_names()) {
        valid += valid.empty() ? name : ", " + name;
      }
      std::fprintf(stderr, "error: unknown suite '%s' (valid: %s, all)\n", suite.c_str(),
                   valid.c_str());
      return kExitConfig;
    }
  }

  int failures = 0;
  for (const geomint::CheckResult& r : results) {
    if (!r.passed) ++failures;
    std::printf("[%s] %s/%s  worst=%.3g tol=%.3g\n", r.passed ? "PASS" : "FAIL",
                r.suite.c_str(), r.name.c_str(), r.worst, r.tolerance);
  }
  std::printf("%zu checks, %d failures (seed %llu)\n", results.size(), failures,
              static_cast<unsigned long long>(seed));
  return failures == 0 ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure-preserving integrators for rigid-body dynamics on SO(3)"};
  app.require_subcommand(1);

  std::string config_path;
  std::string steps_text = "1e-2,5e-3,2.5e-3";
  std::string suite = "all";

  CLI::App* sim = app.add_subcommand("simulate", "Run the configured integrator");
  sim->add_option("--config", config_path, "JSON run configuration")->required();

  CLI::App* order = app.add_subcommand("order", "Empirical convergence order study");
  order->add_option("--config", config_path, "JSON run configuration")->required();
  order->add_option("--steps", steps_text, "Comma-separated step sizes, each half the previous");

  CLI::App* check = app.add_subcommand("check", "Run randomized property suites");
  check->add_option("--suite", suite, "Suite name or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      geomint::RunConfig cfg = geomint::load_run_config(config_path);
      geomint::simulate(cfg);
      std::printf("wrote %s (%ld steps)\n", cfg.output_path.c_str(), cfg.step_count);
      return 0;
    }
    if (order->parsed()) {
      geomint::RunConfig cfg = geomint::load_run_config(config_path);
      geomint::OrderStudyResult result =
          geomint::order_study(cfg, parse_step_list(steps_text));
      std::fputs(geomint::format_order_report(result).c_str(), stdout);
      return 0;
    }
    if (check->parsed()) {
      return run_checks(suite);
    }
  } catch (const geomint::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const geomint::SolverDivergedError& e) {
    std::fprintf(stderr, "solver error: %s\n", e.what());
    return kExitSolver;
  } catch (const geomint::OutOfDomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

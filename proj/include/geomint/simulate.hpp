#pragma once

#include <string>
#include <vector>

#include "geomint/config.hpp"
#include "geomint/trajectory.hpp"

namespace geomint {

// Integrates the configured run and returns one record per step, including
// the initial state at k = 0.
std::vector<TrajectoryRecord> run_simulation(const RunConfig& cfg);

// run_simulation plus the CSV write to cfg.output_path. The config is fully
// validated before anything is written.
void simulate(const RunConfig& cfg);

struct OrderStudyRow {
  double step = 0.0;
  long step_count = 0;
  double error = 0.0;
};

struct OrderStudyResult {
  std::vector<OrderStudyRow> rows;
  double slope = 0.0;
  // All errors at roundoff level (principal axis data, or the reference
  // integrator compared against itself); the slope is meaningless then.
  bool exact = false;
  bool monotone = false;
};

// Terminal error against the reference oracle at the given horizon for each
// step size. Requires at least 3 step sizes, each half the previous.
OrderStudyResult order_study(const RunConfig& cfg, const std::vector<double>& steps,
                             double total_time = 1.0);

std::string format_order_report(const OrderStudyResult& result);

}  // namespace geomint

#pragma once

#include <string>

#include "geomint/integrators.hpp"

namespace geomint {

enum class IntegratorChoice { LiePoisson, EulerPoincare, Reference };

// Fully resolved run description. Exactly one of the initial fiber
// coordinates is given in the config; the other is derived through the
// inertia tensor when needed.
struct RunConfig {
  TauKind tau = TauKind::Exponential;
  double theta = 0.0;
  double step = 0.0;
  long step_count = 0;
  Eigen::Matrix3d inertia = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d initial_rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d initial_fiber = Eigen::Vector3d::Zero();
  bool fiber_is_momentum = true;
  IntegratorChoice integrator = IntegratorChoice::LiePoisson;
  FlowOrientation orientation = FlowOrientation::Forward;
  SolverKind solver = SolverKind::FixedPoint;
  double solver_tol = 1e-13;
  int max_iterations = 100;
  std::string output_path = "trajectory.csv";
  std::string output_format = "csv";
};

// Parses and validates a JSON run configuration. Throws ConfigError naming
// the offending field.
RunConfig parse_run_config(const std::string& json_text);

// Reads the file and parses it. Throws ConfigError on IO failure.
RunConfig load_run_config(const std::string& path);

IntegratorConfig integrator_config(const RunConfig& cfg);

// Initial momentum/velocity resolved through the inertia tensor.
Eigen::Vector3d initial_momentum(const RunConfig& cfg);
Eigen::Vector3d initial_velocity(const RunConfig& cfg);

}  // namespace geomint

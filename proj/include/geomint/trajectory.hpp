#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace geomint {

// One output row. m holds the momentum for lie_poisson/reference runs and
// the body velocity for euler_poincare runs.
struct TrajectoryRecord {
  long k = 0;
  double time = 0.0;
  Eigen::Matrix3d g = Eigen::Matrix3d::Identity();
  Eigen::Vector3d m = Eigen::Vector3d::Zero();
  double energy = 0.0;
  double casimir = 0.0;
  double orth_residual = 0.0;
};

extern const char* const kTrajectoryCsvHeader;

// Writes the fixed-header CSV with 17 significant digits per value.
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRecord>& records);
void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRecord>& records);

}  // namespace geomint

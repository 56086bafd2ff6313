#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "geomint/algebra.hpp"

namespace testutil {

inline Eigen::Matrix3d rz(double t) {
  Eigen::Matrix3d m;
  m << std::cos(t), -std::sin(t), 0.0, std::sin(t), std::cos(t), 0.0, 0.0, 0.0, 1.0;
  return m;
}

inline geomint::GroupElement gz(double t) { return {geomint::GroupId::SO3, rz(t)}; }

inline geomint::GroupElement identity() {
  return {geomint::GroupId::SO3, Eigen::Matrix3d::Identity()};
}

inline geomint::AlgebraVector av(double x, double y, double z) {
  return {Eigen::Vector3d(x, y, z)};
}

inline geomint::CoalgebraVector cv(double x, double y, double z) {
  return {Eigen::Vector3d(x, y, z)};
}

// Deterministic sampler; every test site passes its own fixed seed.
struct Sampler {
  explicit Sampler(std::uint64_t seed) : eng(seed) {}

  double gauss() { return normal(eng); }

  Eigen::Vector3d vec3(double scale = 1.0) {
    return scale * Eigen::Vector3d(gauss(), gauss(), gauss());
  }

  Eigen::Vector3d ball3(double radius) {
    Eigen::Vector3d v = vec3();
    while (v.norm() < 1e-12) v = vec3();
    return (radius * unit(eng)) * v.normalized();
  }

  geomint::GroupElement rotation() {
    Eigen::Quaterniond q(gauss(), gauss(), gauss(), gauss());
    q.normalize();
    return {geomint::GroupId::SO3, q.toRotationMatrix()};
  }

  std::mt19937_64 eng;
  std::normal_distribution<double> normal{0.0, 1.0};
  std::uniform_real_distribution<double> unit{0.0, 1.0};
};

}  // namespace testutil

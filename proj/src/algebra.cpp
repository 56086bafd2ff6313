#include "geomint/algebra.hpp"

#include <stdexcept>

namespace geomint {

double pairing(const CoalgebraVector& mu, const AlgebraVector& xi) {
  if (mu.coords.size() != xi.coords.size()) {
    throw std::invalid_argument("pairing: dimension mismatch");
  }
  return mu.coords.dot(xi.coords);
}

void require_group(const LieGroup& expected, const GroupElement& g) {
  if (g.group != expected.id()) {
    throw std::invalid_argument("group element does not belong to the expected group");
  }
}

void require_dimension(const LieGroup& g, const Eigen::VectorXd& v) {
  if (v.size() != g.dimension()) {
    throw std::invalid_argument("algebra vector has wrong dimension");
  }
}

namespace {

class SO3 final : public LieGroup {
 public:
  GroupId id() const override { return GroupId::SO3; }
  int dimension() const override { return 3; }

  GroupElement identity() const override {
    return {GroupId::SO3, Eigen::Matrix3d::Identity()};
  }

  GroupElement compose(const GroupElement& g, const GroupElement& h) const override {
    require_group(*this, g);
    require_group(*this, h);
    return {GroupId::SO3, g.rep * h.rep};
  }

  GroupElement inverse(const GroupElement& g) const override {
    require_group(*this, g);
    return {GroupId::SO3, g.rep.transpose()};
  }

  AlgebraVector Ad(const GroupElement& g, const AlgebraVector& xi) const override {
    require_group(*this, g);
    require_dimension(*this, xi.coords);
    return {g.rep * xi.coords};
  }

  CoalgebraVector coAd(const GroupElement& g, const CoalgebraVector& mu) const override {
    require_group(*this, g);
    require_dimension(*this, mu.coords);
    return {g.rep.transpose() * mu.coords};
  }

  AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b) const override {
    require_dimension(*this, a.coords);
    require_dimension(*this, b.coords);
    Eigen::Vector3d x = a.coords, y = b.coords;
    return {x.cross(y)};
  }

  CoalgebraVector ad_star(const AlgebraVector& xi, const CoalgebraVector& mu) const override {
    require_dimension(*this, xi.coords);
    require_dimension(*this, mu.coords);
    Eigen::Vector3d m = mu.coords, x = xi.coords;
    return {m.cross(x)};
  }

  Eigen::MatrixXd hat(const AlgebraVector& xi) const override {
    require_dimension(*this, xi.coords);
    Eigen::Matrix3d m;
    m << 0.0, -xi.coords(2), xi.coords(1),
        xi.coords(2), 0.0, -xi.coords(0),
        -xi.coords(1), xi.coords(0), 0.0;
    return m;
  }

  AlgebraVector vee(const Eigen::MatrixXd& m) const override {
    if (m.rows() != 3 || m.cols() != 3) {
      throw std::invalid_argument("vee: expected a 3x3 matrix");
    }
    Eigen::Vector3d v(m(2, 1), m(0, 2), m(1, 0));
    return {v};
  }

  GroupElement project_to_group(const GroupElement& g) const override {
    require_group(*this, g);
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(g.rep, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d u = svd.matrixU(), v = svd.matrixV();
    Eigen::Matrix3d r = u * v.transpose();
    if (r.determinant() < 0.0) {
      u.col(2) *= -1.0;
      r = u * v.transpose();
    }
    return {GroupId::SO3, r};
  }
};

}  // namespace

const LieGroup& so3() {
  static const SO3 instance;
  return instance;
}

}  // namespace geomint

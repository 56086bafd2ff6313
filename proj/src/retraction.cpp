#include "geomint/retraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "geomint/errors.hpp"

namespace geomint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDomainMargin = 1e-9;
// Below this angle the closed-form coefficients switch to their series.
constexpr double kTinyAngle = 1e-4;
// (phi - sin phi)/phi^3 and the dexpinv coefficient cancel catastrophically
// well above kTinyAngle, so they use a longer series below this threshold.
constexpr double kSeriesAngle = 0.1;

double sinc(double phi) {
  if (phi < kTinyAngle) {
    double p2 = phi * phi;
    return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
  }
  return std::sin(phi) / phi;
}

// (1 - cos phi)/phi^2, computed cancellation-free as 2 sin^2(phi/2)/phi^2.
double cos_coeff(double phi) {
  if (phi < kTinyAngle) {
    double p2 = phi * phi;
    return 0.5 - p2 / 24.0 + p2 * p2 / 720.0;
  }
  double s = std::sin(0.5 * phi);
  return 2.0 * s * s / (phi * phi);
}

// (phi - sin phi)/phi^3.
double sin_coeff(double phi) {
  if (phi < kSeriesAngle) {
    double p2 = phi * phi;
    return 1.0 / 6.0 - p2 / 120.0 + p2 * p2 / 5040.0 - p2 * p2 * p2 / 362880.0;
  }
  return (phi - std::sin(phi)) / (phi * phi * phi);
}

// 1/phi^2 - cot(phi/2)/(2 phi), the A^2 coefficient of dtauL_inv for the
// exponential map. Limit 1/12 at phi = 0.
double dexpinv_coeff(double phi) {
  if (phi < kSeriesAngle) {
    double p2 = phi * phi;
    return 1.0 / 12.0 + p2 / 720.0 + p2 * p2 / 30240.0 + p2 * p2 * p2 / 1209600.0;
  }
  double half = 0.5 * phi;
  return 1.0 / (phi * phi) - std::cos(half) / (2.0 * phi * std::sin(half));
}

Eigen::Matrix3d hat3(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

Eigen::Vector3d skew_part_vee(const Eigen::Matrix3d& r) {
  return 0.5 * Eigen::Vector3d(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
}

// Rotation angle in [0, pi], robust across the whole range.
double rotation_angle(const Eigen::Matrix3d& r) {
  double c = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
  return std::atan2(skew_part_vee(r).norm(), c);
}

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& xi) {
  double phi = xi.norm();
  Eigen::Matrix3d a = hat3(xi);
  return Eigen::Matrix3d::Identity() + sinc(phi) * a + cos_coeff(phi) * (a * a);
}

Eigen::Vector3d so3_log(const Eigen::Matrix3d& r) {
  Eigen::Vector3d s = skew_part_vee(r);
  double c = std::clamp(0.5 * (r.trace() - 1.0), -1.0, 1.0);
  double phi = std::atan2(s.norm(), c);
  if (phi >= kPi - kDomainMargin) {
    throw OutOfDomainError("tau_inv: rotation angle too close to pi");
  }
  if (phi < kTinyAngle) {
    double p2 = phi * phi;
    return (1.0 + p2 / 6.0 + 7.0 * p2 * p2 / 360.0) * s;
  }
  if (phi < 3.0) {
    return (phi / s.norm()) * s;
  }
  // Close to pi the skew part is tiny; recover the axis from the symmetric
  // part c I + (1 - c) u u^T instead.
  Eigen::Matrix3d m = 0.5 * (r + r.transpose()) - c * Eigen::Matrix3d::Identity();
  int j = 0;
  m.diagonal().maxCoeff(&j);
  Eigen::Vector3d u = m.col(j);
  u.normalize();
  if (s.dot(u) < 0.0) u = -u;
  return phi * u;
}

class So3TauBase : public TauMap {
 public:
  const LieGroup& group() const override { return so3(); }

  GroupElement tau(const AlgebraVector& xi) const override {
    require_dimension(so3(), xi.coords);
    return {GroupId::SO3, tau_matrix(xi.coords)};
  }

  AlgebraVector tau_inv(const GroupElement& g) const override {
    require_group(so3(), g);
    return {log_vector(g.rep)};
  }

  AlgebraVector dtauL(const AlgebraVector& xi, const AlgebraVector& eta) const override {
    require_dimension(so3(), xi.coords);
    require_dimension(so3(), eta.coords);
    return {dtau_matrix(xi.coords) * eta.coords};
  }

  AlgebraVector dtauL_inv(const AlgebraVector& xi, const AlgebraVector& eta) const override {
    require_dimension(so3(), xi.coords);
    require_dimension(so3(), eta.coords);
    return {dtau_inv_matrix(xi.coords) * eta.coords};
  }

  CoalgebraVector dtauL_dual(const AlgebraVector& xi, const CoalgebraVector& mu) const override {
    require_dimension(so3(), xi.coords);
    require_dimension(so3(), mu.coords);
    return {dtau_matrix(xi.coords).transpose() * mu.coords};
  }

  CoalgebraVector dtauL_dual_inv(const AlgebraVector& xi,
                                 const CoalgebraVector& mu) const override {
    require_dimension(so3(), xi.coords);
    require_dimension(so3(), mu.coords);
    return {dtau_inv_matrix(xi.coords).transpose() * mu.coords};
  }

 protected:
  virtual Eigen::Matrix3d tau_matrix(const Eigen::Vector3d& xi) const = 0;
  virtual Eigen::Vector3d log_vector(const Eigen::Matrix3d& r) const = 0;
  virtual Eigen::Matrix3d dtau_matrix(const Eigen::Vector3d& xi) const = 0;
  virtual Eigen::Matrix3d dtau_inv_matrix(const Eigen::Vector3d& xi) const = 0;
};

class So3ExponentialTau final : public So3TauBase {
 public:
  TauKind kind() const override { return TauKind::Exponential; }

 protected:
  Eigen::Matrix3d tau_matrix(const Eigen::Vector3d& xi) const override {
    return rodrigues(xi);
  }

  Eigen::Vector3d log_vector(const Eigen::Matrix3d& r) const override { return so3_log(r); }

  Eigen::Matrix3d dtau_matrix(const Eigen::Vector3d& xi) const override {
    double phi = xi.norm();
    Eigen::Matrix3d a = hat3(xi);
    return Eigen::Matrix3d::Identity() - cos_coeff(phi) * a + sin_coeff(phi) * (a * a);
  }

  Eigen::Matrix3d dtau_inv_matrix(const Eigen::Vector3d& xi) const override {
    double phi = xi.norm();
    Eigen::Matrix3d a = hat3(xi);
    return Eigen::Matrix3d::Identity() + 0.5 * a + dexpinv_coeff(phi) * (a * a);
  }
};

class So3CayleyTau final : public So3TauBase {
 public:
  TauKind kind() const override { return TauKind::Cayley; }

 protected:
  Eigen::Matrix3d tau_matrix(const Eigen::Vector3d& xi) const override {
    double c = 4.0 / (4.0 + xi.squaredNorm());
    Eigen::Matrix3d a = hat3(xi);
    return Eigen::Matrix3d::Identity() + c * (a + 0.5 * (a * a));
  }

  Eigen::Vector3d log_vector(const Eigen::Matrix3d& r) const override {
    if (rotation_angle(r) >= kPi - kDomainMargin) {
      throw OutOfDomainError("tau_inv: rotation angle too close to pi");
    }
    double tr = r.trace();
    double phi2 = 4.0 * (3.0 - tr) / (1.0 + tr);
    return skew_part_vee(r) * (4.0 + phi2) / 4.0;
  }

  Eigen::Matrix3d dtau_matrix(const Eigen::Vector3d& xi) const override {
    double c = 4.0 / (4.0 + xi.squaredNorm());
    return c * (Eigen::Matrix3d::Identity() - 0.5 * hat3(xi));
  }

  Eigen::Matrix3d dtau_inv_matrix(const Eigen::Vector3d& xi) const override {
    return Eigen::Matrix3d::Identity() + 0.5 * hat3(xi) + 0.25 * (xi * xi.transpose());
  }
};

}  // namespace

std::shared_ptr<const TauMap> make_tau(const LieGroup& group, TauKind kind) {
  if (group.id() != GroupId::SO3) {
    throw std::invalid_argument("make_tau: unsupported group");
  }
  switch (kind) {
    case TauKind::Exponential:
      return std::make_shared<So3ExponentialTau>();
    case TauKind::Cayley:
      return std::make_shared<So3CayleyTau>();
  }
  throw std::invalid_argument("make_tau: unknown tau kind");
}

DiscretizationMap::DiscretizationMap(std::shared_ptr<const TauMap> tau, double theta)
    : tau_(std::move(tau)), theta_(theta) {
  if (!tau_) {
    throw std::invalid_argument("DiscretizationMap: null tau map");
  }
  if (!(theta_ >= 0.0 && theta_ <= 1.0)) {
    throw std::invalid_argument("DiscretizationMap: theta must lie in [0, 1]");
  }
}

std::pair<GroupElement, GroupElement> DiscretizationMap::rd(const GroupElement& g,
                                                            const AlgebraVector& xi) const {
  const LieGroup& G = tau_->group();
  require_group(G, g);
  GroupElement left = G.compose(g, tau_->tau(-theta_ * xi));
  GroupElement right = G.compose(g, tau_->tau((1.0 - theta_) * xi));
  return {left, right};
}

std::pair<GroupElement, AlgebraVector> DiscretizationMap::rd_inv(const GroupElement& g0,
                                                                 const GroupElement& g1) const {
  const LieGroup& G = tau_->group();
  require_group(G, g0);
  require_group(G, g1);
  AlgebraVector one_shot = tau_->tau_inv(G.compose(G.inverse(g0), g1));
  AlgebraVector xi = one_shot;
  if (theta_ != 0.0 && theta_ != 1.0 && tau_->kind() == TauKind::Cayley) {
    // Both legs rotate about the axis of g0^-1 g1; only the magnitude needs
    // solving: 2 atan(theta s/2) + 2 atan((1-theta) s/2) = alpha.
    double s0 = one_shot.norm();
    if (s0 > 0.0) {
      double alpha = 2.0 * std::atan(0.5 * s0);
      double s = s0;
      for (int it = 0; it < 64; ++it) {
        double f = 2.0 * std::atan(0.5 * theta_ * s) + 2.0 * std::atan(0.5 * (1.0 - theta_) * s) -
                   alpha;
        double df = theta_ / (1.0 + 0.25 * theta_ * theta_ * s * s) +
                    (1.0 - theta_) / (1.0 + 0.25 * (1.0 - theta_) * (1.0 - theta_) * s * s);
        double step = f / df;
        s -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(s))) break;
      }
      xi = {(s / s0) * one_shot.coords};
    }
  }
  GroupElement base = G.compose(g0, tau_->tau(theta_ * xi));
  return {base, xi};
}

std::pair<GroupElement, AlgebraVector> DiscretizationMap::rd_inv_newton(
    const GroupElement& g0, const GroupElement& g1) const {
  const LieGroup& G = tau_->group();
  require_group(G, g0);
  require_group(G, g1);
  GroupElement g1_inv = G.inverse(g1);
  auto residual = [&](const AlgebraVector& xi) -> Eigen::VectorXd {
    GroupElement base = G.compose(g0, tau_->tau(theta_ * xi));
    GroupElement leg2 = G.compose(base, tau_->tau((1.0 - theta_) * xi));
    return tau_->tau_inv(G.compose(g1_inv, leg2)).coords;
  };

  AlgebraVector xi = tau_->tau_inv(G.compose(G.inverse(g0), g1));
  const int n = G.dimension();
  const double fd_h = 1e-7;
  Eigen::VectorXd r = residual(xi);
  for (int it = 0; it < 64 && r.norm() > 1e-13; ++it) {
    Eigen::MatrixXd jac(n, n);
    for (int j = 0; j < n; ++j) {
      AlgebraVector pert = xi;
      pert.coords(j) += fd_h;
      jac.col(j) = (residual(pert) - r) / fd_h;
    }
    xi.coords -= jac.partialPivLu().solve(r);
    r = residual(xi);
  }
  if (r.norm() > 1e-10) {
    throw SolverDivergedError("rd_inv_newton failed to converge", r.norm(), 64);
  }
  return {G.compose(g0, tau_->tau(theta_ * xi)), xi};
}

}  // namespace geomint

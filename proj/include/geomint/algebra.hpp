#pragma once

#include <Eigen/Dense>

namespace geomint {

enum class GroupId { SO3 };

// Element of a matrix Lie group. The tag makes cross-group arithmetic a
// detectable contract violation instead of silent nonsense.
struct GroupElement {
  GroupId group;
  Eigen::MatrixXd rep;
};

// Element of the Lie algebra g, coordinates in the chosen basis.
struct AlgebraVector {
  Eigen::VectorXd coords;

  double norm() const { return coords.norm(); }
};

// Element of the dual space g*, coordinates in the dual basis.
struct CoalgebraVector {
  Eigen::VectorXd coords;

  double norm() const { return coords.norm(); }
};

inline AlgebraVector operator+(const AlgebraVector& a, const AlgebraVector& b) {
  return {a.coords + b.coords};
}
inline AlgebraVector operator-(const AlgebraVector& a, const AlgebraVector& b) {
  return {a.coords - b.coords};
}
inline AlgebraVector operator-(const AlgebraVector& a) { return {-a.coords}; }
inline AlgebraVector operator*(double s, const AlgebraVector& a) { return {s * a.coords}; }

inline CoalgebraVector operator+(const CoalgebraVector& a, const CoalgebraVector& b) {
  return {a.coords + b.coords};
}
inline CoalgebraVector operator-(const CoalgebraVector& a, const CoalgebraVector& b) {
  return {a.coords - b.coords};
}
inline CoalgebraVector operator-(const CoalgebraVector& a) { return {-a.coords}; }
inline CoalgebraVector operator*(double s, const CoalgebraVector& a) { return {s * a.coords}; }

// Natural pairing <mu, xi>; coordinates are taken in dual bases so this is the
// Euclidean dot product.
double pairing(const CoalgebraVector& mu, const AlgebraVector& xi);

// Matrix Lie group together with its algebra operations. Dimension is a
// property of the instance, so additional groups (SE(3), products, ...) can be
// added without touching callers.
class LieGroup {
 public:
  virtual ~LieGroup() = default;

  virtual GroupId id() const = 0;
  virtual int dimension() const = 0;

  virtual GroupElement identity() const = 0;
  virtual GroupElement compose(const GroupElement& g, const GroupElement& h) const = 0;
  virtual GroupElement inverse(const GroupElement& g) const = 0;

  // Adjoint action Ad_g : g -> g.
  virtual AlgebraVector Ad(const GroupElement& g, const AlgebraVector& xi) const = 0;
  // Dual map of Ad_g: <coAd(g, mu), xi> = <mu, Ad(g, xi)>.
  virtual CoalgebraVector coAd(const GroupElement& g, const CoalgebraVector& mu) const = 0;

  virtual AlgebraVector bracket(const AlgebraVector& a, const AlgebraVector& b) const = 0;
  // <ad_star(xi, mu), eta> = <mu, bracket(xi, eta)>.
  virtual CoalgebraVector ad_star(const AlgebraVector& xi, const CoalgebraVector& mu) const = 0;

  virtual Eigen::MatrixXd hat(const AlgebraVector& xi) const = 0;
  virtual AlgebraVector vee(const Eigen::MatrixXd& m) const = 0;

  // Closest group element (polar projection). Never called implicitly by the
  // group operations; numerical drift is left visible to the caller.
  virtual GroupElement project_to_group(const GroupElement& g) const = 0;
};

// The rotation group with bracket = cross product and <.,.> the dot product.
const LieGroup& so3();

// Throws std::invalid_argument unless both elements belong to `expected`.
void require_group(const LieGroup& expected, const GroupElement& g);
void require_dimension(const LieGroup& g, const Eigen::VectorXd& v);

}  // namespace geomint

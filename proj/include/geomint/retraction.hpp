#pragma once

#include <memory>
#include <utility>

#include "geomint/algebra.hpp"

namespace geomint {

enum class TauKind { Exponential, Cayley };

// Local diffeomorphism tau : g -> G with tau(0) = e, together with its
// left-trivialized differential and the inverse/dual variants. All four
// differential operators are linear in their second argument.
class TauMap {
 public:
  virtual ~TauMap() = default;

  virtual TauKind kind() const = 0;
  virtual const LieGroup& group() const = 0;

  virtual GroupElement tau(const AlgebraVector& xi) const = 0;
  virtual AlgebraVector tau_inv(const GroupElement& g) const = 0;

  // dtauL(xi, eta) = d/dh tau(xi)^-1 tau(xi + h eta) at h = 0.
  virtual AlgebraVector dtauL(const AlgebraVector& xi, const AlgebraVector& eta) const = 0;
  virtual AlgebraVector dtauL_inv(const AlgebraVector& xi, const AlgebraVector& eta) const = 0;
  virtual CoalgebraVector dtauL_dual(const AlgebraVector& xi, const CoalgebraVector& mu) const = 0;
  virtual CoalgebraVector dtauL_dual_inv(const AlgebraVector& xi,
                                         const CoalgebraVector& mu) const = 0;
};

std::shared_ptr<const TauMap> make_tau(const LieGroup& group, TauKind kind);

// Two-legged discretization map R_d(g, xi) = (g tau(-theta xi), g tau((1-theta) xi)).
class DiscretizationMap {
 public:
  DiscretizationMap(std::shared_ptr<const TauMap> tau, double theta);

  const TauMap& tau_map() const { return *tau_; }
  std::shared_ptr<const TauMap> tau_ptr() const { return tau_; }
  double theta() const { return theta_; }

  std::pair<GroupElement, GroupElement> rd(const GroupElement& g, const AlgebraVector& xi) const;

  // The unique (g, xi) with rd(g, xi) = (g0, g1). Closed form for the
  // Exponential map, a monotone scalar solve for Cayley.
  std::pair<GroupElement, AlgebraVector> rd_inv(const GroupElement& g0,
                                                const GroupElement& g1) const;

  // Generic Newton inversion (finite-difference Jacobian). Slower than
  // rd_inv but makes no commutation assumptions about tau.
  std::pair<GroupElement, AlgebraVector> rd_inv_newton(const GroupElement& g0,
                                                       const GroupElement& g1) const;

 private:
  std::shared_ptr<const TauMap> tau_;
  double theta_;
};

}  // namespace geomint

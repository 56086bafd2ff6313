#pragma once

#include <functional>

#include "geomint/bundles.hpp"
#include "geomint/retraction.hpp"

namespace geomint {

// Symmetric positive definite inertia tensor g -> g*, inverse cached at
// construction.
class InertiaOperator {
 public:
  explicit InertiaOperator(const Eigen::MatrixXd& m);
  static InertiaOperator diagonal(const Eigen::VectorXd& d);

  int dimension() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXd& matrix() const { return mat_; }

  CoalgebraVector apply(const AlgebraVector& xi) const;
  AlgebraVector apply_inverse(const CoalgebraVector& mu) const;

 private:
  Eigen::MatrixXd mat_;
  Eigen::MatrixXd inv_;
};

struct LiePoissonState {
  GroupElement g;
  CoalgebraVector mu;
};

struct EulerPoincareState {
  GroupElement g;
  AlgebraVector xi;
};

enum class SolverKind { FixedPoint, Newton };

// Sign convention of the implicit momentum step. `Paper` keeps the literal
// minus sign of the printed scheme, which steps the time-reversed flow;
// `Forward` flips it so the update converges to the continuous equations.
enum class FlowOrientation { Paper, Forward };

struct IntegratorConfig {
  double step = 1e-2;
  double solver_tol = 1e-13;
  int max_iterations = 100;
  SolverKind solver = SolverKind::FixedPoint;
  FlowOrientation orientation = FlowOrientation::Forward;
};

// Throws std::invalid_argument on a non-positive or non-finite step or
// tolerance, or max_iterations < 1.
void validate_config(const IntegratorConfig& cfg);

// Trivialized Hamiltonian vector field of h(mu) = 1/2 <mu, I^-1 mu>.
TTStarGPoint lie_poisson_vf(const LieGroup& G, const InertiaOperator& inertia,
                            const LiePoissonState& s);

// xi_dot = I^-1 ad*_xi(I xi).
AlgebraVector euler_arnold_rhs(const LieGroup& G, const InertiaOperator& inertia,
                               const AlgebraVector& xi);

// Trivialized Lagrangian vector field of l(xi) = 1/2 <I xi, xi>.
TTGPoint euler_poincare_vf(const LieGroup& G, const InertiaOperator& inertia,
                           const EulerPoincareState& s);

// Solves residual(xi) = 0. FixedPoint iterates xi <- xi - residual(xi) and
// throws SolverDivergedError when the iteration fails to contract; Newton
// uses a finite-difference Jacobian (h = 1e-7).
AlgebraVector fixed_point_solve(
    const std::function<AlgebraVector(const AlgebraVector&)>& residual,
    const AlgebraVector& guess, double tol, int max_iterations,
    SolverKind kind = SolverKind::FixedPoint);

// One step of the implicit coadjoint momentum scheme (theta = 0):
// solve xi = sigma t I^-1 dtauL_dual(xi, coAd(tau(xi), mu_k)), then
// mu_{k+1} = coAd(tau(xi), mu_k), g_{k+1} = g_k tau(xi).
LiePoissonState lie_poisson_step(const InertiaOperator& inertia, const IntegratorConfig& cfg,
                                 const DiscretizationMap& map, const LiePoissonState& s);

// One explicit velocity step (theta = 0): g_{k+1} = g_k tau(t xi_k),
// xi_{k+1} = Ad(tau(-t xi_k), xi_k) + dtauL(t xi_k, t xi_dot_k).
EulerPoincareState euler_poincare_step(const InertiaOperator& inertia,
                                       const IntegratorConfig& cfg,
                                       const DiscretizationMap& map,
                                       const EulerPoincareState& s);

// One step of g_dot = g hat(f(g)): explicit for theta = 0, otherwise the
// implicit midpoint-style update through the discretization map.
GroupElement group_flow_step(const std::function<AlgebraVector(const GroupElement&)>& field,
                             const IntegratorConfig& cfg, const DiscretizationMap& map,
                             const GroupElement& g);

// Back-substitution defect of an accepted step through the inverse lift:
// how far the endpoint pair is from satisfying the discrete equations with
// the step-scaled vector field at the reconstructed base point.
double lie_poisson_step_residual(const InertiaOperator& inertia, const IntegratorConfig& cfg,
                                 const DiscretizationMap& map, const LiePoissonState& from,
                                 const LiePoissonState& to);
double euler_poincare_step_residual(const InertiaOperator& inertia, const IntegratorConfig& cfg,
                                    const DiscretizationMap& map, const EulerPoincareState& from,
                                    const EulerPoincareState& to);

}  // namespace geomint

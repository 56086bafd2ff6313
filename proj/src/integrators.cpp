#include "geomint/integrators.hpp"

#include <cmath>
#include <stdexcept>

#include "geomint/errors.hpp"
#include "geomint/lifts.hpp"

namespace geomint {

void validate_config(const IntegratorConfig& cfg) {
  if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) {
    throw std::invalid_argument("IntegratorConfig: step must be positive and finite");
  }
  if (!(cfg.solver_tol > 0.0)) {
    throw std::invalid_argument("IntegratorConfig: solver tolerance must be positive");
  }
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("IntegratorConfig: max iterations must be at least 1");
  }
}

namespace {

// Steps accept t = 0 as the degenerate identity step; the strictly positive
// requirement applies to user-facing configs (validate_config).
void validate_step(const IntegratorConfig& cfg) {
  if (!(cfg.step >= 0.0) || !std::isfinite(cfg.step)) {
    throw std::invalid_argument("IntegratorConfig: step must be non-negative and finite");
  }
  if (!(cfg.solver_tol > 0.0)) {
    throw std::invalid_argument("IntegratorConfig: solver tolerance must be positive");
  }
  if (cfg.max_iterations < 1) {
    throw std::invalid_argument("IntegratorConfig: max iterations must be at least 1");
  }
}

void require_explicit_theta(const DiscretizationMap& map, const char* op) {
  if (map.theta() != 0.0) {
    throw std::invalid_argument(std::string(op) + ": requires theta = 0");
  }
}

double orientation_sign(const IntegratorConfig& cfg) {
  return cfg.orientation == FlowOrientation::Forward ? 1.0 : -1.0;
}

}  // namespace

InertiaOperator::InertiaOperator(const Eigen::MatrixXd& m) : mat_(m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("InertiaOperator: matrix must be square");
  }
  if ((m - m.transpose()).norm() > 1e-12 * (1.0 + m.norm())) {
    throw std::invalid_argument("InertiaOperator: matrix must be symmetric");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("InertiaOperator: matrix must be positive definite");
  }
  inv_ = llt.solve(Eigen::MatrixXd::Identity(m.rows(), m.cols()));
}

InertiaOperator InertiaOperator::diagonal(const Eigen::VectorXd& d) {
  return InertiaOperator(Eigen::MatrixXd(d.asDiagonal()));
}

CoalgebraVector InertiaOperator::apply(const AlgebraVector& xi) const {
  if (xi.coords.size() != mat_.rows()) {
    throw std::invalid_argument("InertiaOperator: dimension mismatch");
  }
  return {mat_ * xi.coords};
}

AlgebraVector InertiaOperator::apply_inverse(const CoalgebraVector& mu) const {
  if (mu.coords.size() != mat_.rows()) {
    throw std::invalid_argument("InertiaOperator: dimension mismatch");
  }
  return {inv_ * mu.coords};
}

TTStarGPoint lie_poisson_vf(const LieGroup& G, const InertiaOperator& inertia,
                            const LiePoissonState& s) {
  require_group(G, s.g);
  return {s.g, s.mu, inertia.apply_inverse(s.mu),
          {Eigen::VectorXd::Zero(G.dimension())}};
}

AlgebraVector euler_arnold_rhs(const LieGroup& G, const InertiaOperator& inertia,
                               const AlgebraVector& xi) {
  return inertia.apply_inverse(G.ad_star(xi, inertia.apply(xi)));
}

TTGPoint euler_poincare_vf(const LieGroup& G, const InertiaOperator& inertia,
                           const EulerPoincareState& s) {
  require_group(G, s.g);
  return {s.g, s.xi, s.xi, euler_arnold_rhs(G, inertia, s.xi)};
}

AlgebraVector fixed_point_solve(
    const std::function<AlgebraVector(const AlgebraVector&)>& residual,
    const AlgebraVector& guess, double tol, int max_iterations, SolverKind kind) {
  AlgebraVector xi = guess;
  Eigen::VectorXd r = residual(xi).coords;
  const double runaway = 1e8 * (1.0 + r.norm());
  const int n = static_cast<int>(guess.coords.size());

  for (int it = 0; it < max_iterations; ++it) {
    if (r.norm() <= tol) return xi;
    if (!r.allFinite() || r.norm() > runaway) {
      throw SolverDivergedError("solver residual blew up", r.norm(), it);
    }
    if (kind == SolverKind::FixedPoint) {
      xi.coords -= r;
    } else {
      const double h = 1e-7;
      Eigen::MatrixXd jac(n, n);
      for (int j = 0; j < n; ++j) {
        AlgebraVector pert = xi;
        pert.coords(j) += h;
        jac.col(j) = (residual(pert).coords - r) / h;
      }
      xi.coords -= jac.partialPivLu().solve(r);
    }
    r = residual(xi).coords;
  }
  if (r.norm() <= tol) return xi;
  throw SolverDivergedError("solver did not reach tolerance", r.norm(), max_iterations);
}

LiePoissonState lie_poisson_step(const InertiaOperator& inertia, const IntegratorConfig& cfg,
                                 const DiscretizationMap& map, const LiePoissonState& s) {
  validate_step(cfg);
  require_explicit_theta(map, "lie_poisson_step");
  const TauMap& tau = map.tau_map();
  const LieGroup& G = tau.group();
  require_group(G, s.g);
  const double st = orientation_sign(cfg) * cfg.step;

  auto next_mu = [&](const AlgebraVector& xi) { return G.coAd(tau.tau(xi), s.mu); };
  auto residual = [&](const AlgebraVector& xi) {
    return xi - st * inertia.apply_inverse(tau.dtauL_dual(xi, next_mu(xi)));
  };
  AlgebraVector xi = fixed_point_solve(residual, st * inertia.apply_inverse(s.mu),
                                       cfg.solver_tol, cfg.max_iterations, cfg.solver);
  return {G.compose(s.g, tau.tau(xi)), next_mu(xi)};
}

EulerPoincareState euler_poincare_step(const InertiaOperator& inertia,
                                       const IntegratorConfig& cfg,
                                       const DiscretizationMap& map,
                                       const EulerPoincareState& s) {
  validate_step(cfg);
  require_explicit_theta(map, "euler_poincare_step");
  const TauMap& tau = map.tau_map();
  const LieGroup& G = tau.group();
  require_group(G, s.g);
  const double t = cfg.step;

  AlgebraVector xi_bar = t * s.xi;
  GroupElement inc = tau.tau(xi_bar);
  AlgebraVector xi_next = G.Ad(G.inverse(inc), s.xi) +
                          tau.dtauL(xi_bar, t * euler_arnold_rhs(G, inertia, s.xi));
  return {G.compose(s.g, inc), xi_next};
}

GroupElement group_flow_step(const std::function<AlgebraVector(const GroupElement&)>& field,
                             const IntegratorConfig& cfg, const DiscretizationMap& map,
                             const GroupElement& g) {
  validate_step(cfg);
  const TauMap& tau = map.tau_map();
  const LieGroup& G = tau.group();
  require_group(G, g);
  const double t = cfg.step;
  const double theta = map.theta();

  if (theta == 0.0) {
    return G.compose(g, tau.tau(t * field(g)));
  }
  auto residual = [&](const AlgebraVector& xi) {
    return xi - t * field(G.compose(g, tau.tau(theta * xi)));
  };
  AlgebraVector xi = fixed_point_solve(residual, t * field(g), cfg.solver_tol,
                                       cfg.max_iterations, cfg.solver);
  return G.compose(G.compose(g, tau.tau(theta * xi)), tau.tau((1.0 - theta) * xi));
}

double lie_poisson_step_residual(const InertiaOperator& inertia, const IntegratorConfig& cfg,
                                 const DiscretizationMap& map, const LiePoissonState& from,
                                 const LiePoissonState& to) {
  TTStarGPoint q = cotangent_lift_inverse(map, {from.g, from.mu}, {to.g, to.mu});
  // The forward-oriented step satisfies the discrete equations with the step
  // reversed, hence the flipped sign.
  const double st = -orientation_sign(cfg) * cfg.step;
  AlgebraVector defect = q.xi_bar - st * inertia.apply_inverse(q.mu);
  return defect.norm() + q.mu_tilde.norm();
}

double euler_poincare_step_residual(const InertiaOperator& inertia, const IntegratorConfig& cfg,
                                    const DiscretizationMap& map, const EulerPoincareState& from,
                                    const EulerPoincareState& to) {
  const LieGroup& G = map.tau_map().group();
  TTGPoint q = tangent_lift_inverse(map, {from.g, from.xi}, {to.g, to.xi});
  AlgebraVector defect_vel = q.xi_bar - cfg.step * q.xi;
  AlgebraVector defect_acc = q.xi_tilde - cfg.step * euler_arnold_rhs(G, inertia, q.xi);
  return defect_vel.norm() + defect_acc.norm();
}

}  // namespace geomint

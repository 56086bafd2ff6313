#include "geomint/lifts.hpp"

#include <stdexcept>

namespace geomint {

namespace {

constexpr double kFdStep = 1e-6;

void require_explicit_theta(const DiscretizationMap& map, const char* op) {
  if (map.theta() != 0.0) {
    throw std::invalid_argument(std::string(op) + ": closed form requires theta = 0");
  }
}

// Left-trivialized curve derivative by central differences, projected onto
// the algebra.
AlgebraVector fd_body_velocity(const LieGroup& G, const GroupElement& at,
                               const GroupElement& plus, const GroupElement& minus) {
  Eigen::MatrixXd m =
      (G.inverse(at).rep * (plus.rep - minus.rep)) / (2.0 * kFdStep);
  return G.vee(0.5 * (m - m.transpose()));
}

}  // namespace

std::pair<TangentPoint, TangentPoint> tangent_of_rd(const DiscretizationMap& map,
                                                    const TTGPoint& p) {
  const TauMap& tau = map.tau_map();
  const LieGroup& G = tau.group();
  if (map.theta() == 0.0) {
    GroupElement t = tau.tau(p.xi);
    TangentPoint first{p.g, p.xi_bar};
    TangentPoint second{G.compose(p.g, t),
                        G.Ad(G.inverse(t), p.xi_bar) + tau.dtauL(p.xi, p.xi_tilde)};
    return {first, second};
  }
  // Diagnostic-quality finite-difference path for theta != 0.
  auto legs_at = [&](double h) {
    GroupElement gh = G.compose(p.g, tau.tau(h * p.xi_bar));
    return map.rd(gh, p.xi + h * p.xi_tilde);
  };
  auto center = map.rd(p.g, p.xi);
  auto plus = legs_at(kFdStep);
  auto minus = legs_at(-kFdStep);
  TangentPoint first{center.first,
                     fd_body_velocity(G, center.first, plus.first, minus.first)};
  TangentPoint second{center.second,
                      fd_body_velocity(G, center.second, plus.second, minus.second)};
  return {first, second};
}

std::pair<TangentPoint, TangentPoint> tangent_lift(const DiscretizationMap& map,
                                                   const TTGPoint& p) {
  return tangent_of_rd(map, kappa(map.tau_map().group(), p));
}

TTGPoint tangent_lift_inverse(const DiscretizationMap& map, const TangentPoint& a,
                              const TangentPoint& b) {
  require_explicit_theta(map, "tangent_lift_inverse");
  const TauMap& tau = map.tau_map();
  const LieGroup& G = tau.group();
  AlgebraVector xi_bar = tau.tau_inv(G.compose(G.inverse(a.g), b.g));
  GroupElement t_inv = G.inverse(tau.tau(xi_bar));
  AlgebraVector xi_tilde =
      tau.dtauL_inv(xi_bar, b.xi - G.Ad(t_inv, a.xi)) - G.bracket(a.xi, xi_bar);
  return {a.g, a.xi, xi_bar, xi_tilde};
}

TStarTGPoint cotangent_map_of_rd(const DiscretizationMap& map, const ProductCotangentPoint& p) {
  require_explicit_theta(map, "cotangent_map_of_rd");
  const TauMap& tau = map.tau_map();
  const LieGroup& G = tau.group();
  AlgebraVector xi = tau.tau_inv(G.compose(G.inverse(p.g), p.h));
  GroupElement t_inv = G.inverse(tau.tau(xi));
  CoalgebraVector p_tilde = tau.dtauL_dual(xi, p.nu);
  CoalgebraVector p_bar = p.mu + G.coAd(t_inv, p.nu) + G.ad_star(xi, p_tilde);
  return {p.g, xi, p_bar, p_tilde};
}

ProductCotangentPoint cotangent_map_of_rd_inverse(const DiscretizationMap& map,
                                                  const TStarTGPoint& p) {
  require_explicit_theta(map, "cotangent_map_of_rd_inverse");
  const TauMap& tau = map.tau_map();
  const LieGroup& G = tau.group();
  GroupElement t = tau.tau(p.xi);
  CoalgebraVector nu = tau.dtauL_dual_inv(p.xi, p.p_tilde);
  CoalgebraVector mu = p.p_bar - G.coAd(G.inverse(t), nu) - G.ad_star(p.xi, p.p_tilde);
  return {p.g, G.compose(p.g, t), mu, nu};
}

std::pair<CotangentPoint, CotangentPoint> cotangent_lift(const DiscretizationMap& map,
                                                         const TTStarGPoint& p) {
  require_explicit_theta(map, "cotangent_lift");
  const LieGroup& G = map.tau_map().group();
  return phi_inv(cotangent_map_of_rd_inverse(map, alpha(G, p)));
}

TTStarGPoint cotangent_lift_inverse(const DiscretizationMap& map, const CotangentPoint& a,
                                    const CotangentPoint& b) {
  require_explicit_theta(map, "cotangent_lift_inverse");
  const TauMap& tau = map.tau_map();
  const LieGroup& G = tau.group();
  AlgebraVector xi = tau.tau_inv(G.compose(G.inverse(a.g), b.g));
  GroupElement t_inv = G.inverse(tau.tau(xi));
  return {a.g, -tau.dtauL_dual(xi, b.mu), xi, a.mu - G.coAd(t_inv, b.mu)};
}

}  // namespace geomint

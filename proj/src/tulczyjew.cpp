#include "geomint/tulczyjew.hpp"

namespace geomint {

TStarTGPoint alpha(const LieGroup& G, const TTStarGPoint& p) {
  return {p.g, p.xi_bar, p.mu_tilde + G.ad_star(p.xi_bar, p.mu), p.mu};
}

TTStarGPoint alpha_inv(const LieGroup& G, const TStarTGPoint& p) {
  return {p.g, p.p_tilde, p.xi, p.p_bar - G.ad_star(p.xi, p.p_tilde)};
}

TStarTStarGPoint beta(const LieGroup& G, const TTStarGPoint& p) {
  return {p.g, p.mu, p.mu_tilde + G.ad_star(p.xi_bar, p.mu), -p.xi_bar};
}

TTStarGPoint beta_inv(const LieGroup& G, const TStarTStarGPoint& p) {
  return {p.g, p.mu, -p.eta, p.nu - G.ad_star(-p.eta, p.mu)};
}

TTGPoint kappa(const LieGroup& G, const TTGPoint& p) {
  return {p.g, p.xi_bar, p.xi, p.xi_tilde + G.bracket(p.xi, p.xi_bar)};
}

ProductCotangentPoint phi(const CotangentPoint& a, const CotangentPoint& b) {
  return {a.g, b.g, a.mu, -b.mu};
}

std::pair<CotangentPoint, CotangentPoint> phi_inv(const ProductCotangentPoint& p) {
  return {CotangentPoint{p.g, p.mu}, CotangentPoint{p.h, -p.nu}};
}

}  // namespace geomint

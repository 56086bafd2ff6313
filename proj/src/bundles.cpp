#include "geomint/bundles.hpp"

namespace geomint {

namespace {

AlgebraVector zero_vec(const LieGroup& G) {
  return {Eigen::VectorXd::Zero(G.dimension())};
}

CoalgebraVector zero_covec(const LieGroup& G) {
  return {Eigen::VectorXd::Zero(G.dimension())};
}

}  // namespace

TangentPoint tg_identity(const LieGroup& G) { return {G.identity(), zero_vec(G)}; }

TangentPoint tg_mult(const LieGroup& G, const TangentPoint& a, const TangentPoint& b) {
  GroupElement h_inv = G.inverse(b.g);
  return {G.compose(a.g, b.g), G.Ad(h_inv, a.xi) + b.xi};
}

TangentPoint tg_inverse(const LieGroup& G, const TangentPoint& a) {
  return {G.inverse(a.g), -G.Ad(a.g, a.xi)};
}

CotangentPoint tstarg_identity(const LieGroup& G) { return {G.identity(), zero_covec(G)}; }

CotangentPoint tstarg_mult(const LieGroup& G, const CotangentPoint& a, const CotangentPoint& b) {
  return {G.compose(a.g, b.g), G.coAd(b.g, a.mu) + b.mu};
}

CotangentPoint tstarg_inverse(const LieGroup& G, const CotangentPoint& a) {
  GroupElement g_inv = G.inverse(a.g);
  return {g_inv, -G.coAd(g_inv, a.mu)};
}

TTGPoint ttg_identity(const LieGroup& G) {
  return {G.identity(), zero_vec(G), zero_vec(G), zero_vec(G)};
}

TTGPoint ttg_mult(const LieGroup& G, const TTGPoint& a, const TTGPoint& b) {
  GroupElement h_inv = G.inverse(b.g);
  AlgebraVector mixed = a.xi_tilde + G.bracket(a.xi_bar, G.Ad(b.g, b.xi));
  return {G.compose(a.g, b.g),
          G.Ad(h_inv, a.xi) + b.xi,
          G.Ad(h_inv, a.xi_bar) + b.xi_bar,
          G.Ad(h_inv, mixed) + b.xi_tilde};
}

TTGPoint ttg_inverse(const LieGroup& G, const TTGPoint& a) {
  return {G.inverse(a.g),
          -G.Ad(a.g, a.xi),
          -G.Ad(a.g, a.xi_bar),
          -G.Ad(a.g, a.xi_tilde + G.bracket(a.xi, a.xi_bar))};
}

}  // namespace geomint

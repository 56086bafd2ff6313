#pragma once

#include "geomint/algebra.hpp"

namespace geomint {

// Left-trivialized tangent bundle point: (g, xi) in G x g.
struct TangentPoint {
  GroupElement g;
  AlgebraVector xi;
};

// Left-trivialized cotangent bundle point: (g, mu) in G x g*.
struct CotangentPoint {
  GroupElement g;
  CoalgebraVector mu;
};

// Left-trivialized second tangent bundle point: (g, xi, xi_bar, xi_tilde).
// xi is the fiber coordinate of the base tangent point, (xi_bar, xi_tilde)
// the trivialized velocity.
struct TTGPoint {
  GroupElement g;
  AlgebraVector xi;
  AlgebraVector xi_bar;
  AlgebraVector xi_tilde;
};

// Tangent of the cotangent bundle: (g, mu, xi_bar, mu_tilde).
struct TTStarGPoint {
  GroupElement g;
  CoalgebraVector mu;
  AlgebraVector xi_bar;
  CoalgebraVector mu_tilde;
};

// Cotangent of the tangent bundle: (g, xi, p_bar, p_tilde).
struct TStarTGPoint {
  GroupElement g;
  AlgebraVector xi;
  CoalgebraVector p_bar;
  CoalgebraVector p_tilde;
};

// Cotangent of the cotangent bundle: (g, mu, nu, eta).
struct TStarTStarGPoint {
  GroupElement g;
  CoalgebraVector mu;
  CoalgebraVector nu;
  AlgebraVector eta;
};

// Semidirect group structure on G x g: (g, xi)(h, eta) = (gh, Ad_{h^-1} xi + eta).
TangentPoint tg_identity(const LieGroup& G);
TangentPoint tg_mult(const LieGroup& G, const TangentPoint& a, const TangentPoint& b);
TangentPoint tg_inverse(const LieGroup& G, const TangentPoint& a);

// Semidirect group structure on G x g*, twisted by the coadjoint action of
// h^-1, i.e. by coAd at h.
CotangentPoint tstarg_identity(const LieGroup& G);
CotangentPoint tstarg_mult(const LieGroup& G, const CotangentPoint& a, const CotangentPoint& b);
CotangentPoint tstarg_inverse(const LieGroup& G, const CotangentPoint& a);

// Group structure of the double semidirect product (G x g) x (g x g). Among
// the second-order bundles only this one is a group; the other three are
// plain containers.
TTGPoint ttg_identity(const LieGroup& G);
TTGPoint ttg_mult(const LieGroup& G, const TTGPoint& a, const TTGPoint& b);
TTGPoint ttg_inverse(const LieGroup& G, const TTGPoint& a);

inline TangentPoint pr12(const TTGPoint& p) { return {p.g, p.xi}; }
inline CotangentPoint pr12(const TTStarGPoint& p) { return {p.g, p.mu}; }
inline TangentPoint pr13(const TTGPoint& p) { return {p.g, p.xi_bar}; }

}  // namespace geomint

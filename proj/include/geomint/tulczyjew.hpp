#pragma once

#include <utility>

#include "geomint/bundles.hpp"

namespace geomint {

// The three legs of the trivialized Tulczyjew triple together with the
// cotangent-bundle pairing map on a product group. All maps are vector-bundle
// isomorphisms over the identity on the first slot.

TStarTGPoint alpha(const LieGroup& G, const TTStarGPoint& p);
TTStarGPoint alpha_inv(const LieGroup& G, const TStarTGPoint& p);

TStarTStarGPoint beta(const LieGroup& G, const TTStarGPoint& p);
TTStarGPoint beta_inv(const LieGroup& G, const TStarTStarGPoint& p);

TTGPoint kappa(const LieGroup& G, const TTGPoint& p);

// Trivialized covector on the product group G x G.
struct ProductCotangentPoint {
  GroupElement g;
  GroupElement h;
  CoalgebraVector mu;
  CoalgebraVector nu;
};

// Identification T*G x T*G ~ T*(G x G), flipping the sign of the second
// covector slot. phi_inv undoes phi.
ProductCotangentPoint phi(const CotangentPoint& a, const CotangentPoint& b);
std::pair<CotangentPoint, CotangentPoint> phi_inv(const ProductCotangentPoint& p);

}  // namespace geomint

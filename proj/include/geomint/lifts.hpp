#pragma once

#include <utility>

#include "geomint/bundles.hpp"
#include "geomint/retraction.hpp"
#include "geomint/tulczyjew.hpp"

namespace geomint {

// Trivialized tangent map of rd at the point (p.g, p.xi) applied to the
// velocity (p.xi_bar, p.xi_tilde). Closed form for theta = 0; other theta
// values fall back to finite differences and are diagnostic quality, not
// meant for production stepping.
std::pair<TangentPoint, TangentPoint> tangent_of_rd(const DiscretizationMap& map,
                                                    const TTGPoint& p);

// Tangent lift of rd: tangent_of_rd composed with kappa. Linear in the
// slots (xi, xi_tilde) for fixed (g, xi_bar).
std::pair<TangentPoint, TangentPoint> tangent_lift(const DiscretizationMap& map,
                                                   const TTGPoint& p);

// Unique preimage of a pair of trivialized tangent points under the tangent
// lift. Requires theta = 0.
TTGPoint tangent_lift_inverse(const DiscretizationMap& map, const TangentPoint& a,
                              const TangentPoint& b);

// Trivialized cotangent map of rd and its inverse; the forward direction
// sends a covector on G x G to a covector on G x g. Requires theta = 0.
TStarTGPoint cotangent_map_of_rd(const DiscretizationMap& map, const ProductCotangentPoint& p);
ProductCotangentPoint cotangent_map_of_rd_inverse(const DiscretizationMap& map,
                                                  const TStarTGPoint& p);

// Cotangent lift of rd, assembled as the commuting composition
// phi_inv . cotangent_map_of_rd_inverse . alpha. Linear in the covector
// slots (mu, mu_tilde) for fixed (g, xi_bar). Requires theta = 0.
std::pair<CotangentPoint, CotangentPoint> cotangent_lift(const DiscretizationMap& map,
                                                         const TTStarGPoint& p);

// Direct closed form of the inverse cotangent lift. Requires theta = 0.
TTStarGPoint cotangent_lift_inverse(const DiscretizationMap& map, const CotangentPoint& a,
                                    const CotangentPoint& b);

}  // namespace geomint

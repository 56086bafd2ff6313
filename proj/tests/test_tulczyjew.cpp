#include <doctest.h>

#include "geomint/tulczyjew.hpp"
#include "helpers.hpp"

using namespace geomint;
using namespace testutil;

namespace {
double dist(const GroupElement& a, const GroupElement& b) { return (a.rep - b.rep).norm(); }

// Brute-force ad* through the defining pairing, independent of the library's
// cross-product shortcut.
Eigen::Vector3d ad_star_oracle(const LieGroup& G, const Eigen::Vector3d& xi,
                               const Eigen::Vector3d& mu) {
  Eigen::Vector3d out;
  for (int i = 0; i < 3; ++i) {
    AlgebraVector basis = av(i == 0, i == 1, i == 2);
    out(i) = pairing({mu}, G.bracket({xi}, basis));
  }
  return out;
}
}  // namespace

TEST_CASE("alpha") {
  const LieGroup& G = so3();
  Sampler s(301);

  // Zero third slot kills the ad* term.
  for (int i = 0; i < 20; ++i) {
    GroupElement g = s.rotation();
    CoalgebraVector mu{s.vec3()}, nu{s.vec3()};
    TStarTGPoint q = alpha(G, {g, mu, av(0, 0, 0), nu});
    CHECK(dist(q.g, g) == 0.0);
    CHECK(q.xi.norm() == 0.0);
    CHECK((q.p_bar.coords - nu.coords).norm() == 0.0);
    CHECK((q.p_tilde.coords - mu.coords).norm() == 0.0);
  }

  // ad*_{e1} e2* = -e3* by the pairing oracle.
  Eigen::Vector3d twist = ad_star_oracle(G, {1, 0, 0}, {0, 1, 0});
  CHECK((twist - Eigen::Vector3d(0, 0, -1)).norm() == 0.0);
  TStarTGPoint q = alpha(G, {identity(), cv(0, 1, 0), av(1, 0, 0), cv(0, 0, 0)});
  CHECK(dist(q.g, identity()) == 0.0);
  CHECK((q.xi.coords - Eigen::Vector3d(1, 0, 0)).norm() == 0.0);
  CHECK((q.p_bar.coords - twist).norm() == 0.0);
  CHECK((q.p_tilde.coords - Eigen::Vector3d(0, 1, 0)).norm() == 0.0);

  for (int i = 0; i < 50; ++i) {
    TTStarGPoint p{s.rotation(), {s.vec3()}, {s.vec3()}, {s.vec3()}};
    TTStarGPoint back = alpha_inv(G, alpha(G, p));
    CHECK(dist(back.g, p.g) == 0.0);
    CHECK((back.mu.coords - p.mu.coords).norm() < 1e-13);
    CHECK((back.xi_bar.coords - p.xi_bar.coords).norm() < 1e-13);
    CHECK((back.mu_tilde.coords - p.mu_tilde.coords).norm() < 1e-13);
  }
}

TEST_CASE("alpha_inv") {
  const LieGroup& G = so3();
  Sampler s(302);

  for (int i = 0; i < 20; ++i) {
    GroupElement g = s.rotation();
    CoalgebraVector mu{s.vec3()}, nu{s.vec3()};
    TTStarGPoint p = alpha_inv(G, {g, av(0, 0, 0), nu, mu});
    CHECK(dist(p.g, g) == 0.0);
    CHECK((p.mu.coords - mu.coords).norm() == 0.0);
    CHECK(p.xi_bar.norm() == 0.0);
    CHECK((p.mu_tilde.coords - nu.coords).norm() == 0.0);
  }

  // Inverse of the worked alpha example.
  TTStarGPoint p = alpha_inv(G, {identity(), av(1, 0, 0), cv(0, 0, -1), cv(0, 1, 0)});
  CHECK((p.mu.coords - Eigen::Vector3d(0, 1, 0)).norm() == 0.0);
  CHECK((p.xi_bar.coords - Eigen::Vector3d(1, 0, 0)).norm() == 0.0);
  CHECK(p.mu_tilde.norm() == 0.0);

  for (int i = 0; i < 50; ++i) {
    TStarTGPoint q{s.rotation(), {s.vec3()}, {s.vec3()}, {s.vec3()}};
    TStarTGPoint back = alpha(G, alpha_inv(G, q));
    CHECK(dist(back.g, q.g) == 0.0);
    CHECK((back.xi.coords - q.xi.coords).norm() < 1e-13);
    CHECK((back.p_bar.coords - q.p_bar.coords).norm() < 1e-13);
    CHECK((back.p_tilde.coords - q.p_tilde.coords).norm() < 1e-13);
  }
}

TEST_CASE("beta") {
  const LieGroup& G = so3();
  Sampler s(303);

  for (int i = 0; i < 20; ++i) {
    GroupElement g = s.rotation();
    CoalgebraVector mu{s.vec3()}, nu{s.vec3()};
    TStarTStarGPoint q = beta(G, {g, mu, av(0, 0, 0), nu});
    CHECK(dist(q.g, g) == 0.0);
    CHECK((q.mu.coords - mu.coords).norm() == 0.0);
    CHECK((q.nu.coords - nu.coords).norm() == 0.0);
    CHECK(q.eta.norm() == 0.0);
  }

  TStarTStarGPoint q = beta(G, {identity(), cv(0, 1, 0), av(1, 0, 0), cv(0, 0, 0)});
  CHECK((q.mu.coords - Eigen::Vector3d(0, 1, 0)).norm() == 0.0);
  CHECK((q.nu.coords - ad_star_oracle(G, {1, 0, 0}, {0, 1, 0})).norm() == 0.0);
  CHECK((q.eta.coords - Eigen::Vector3d(-1, 0, 0)).norm() == 0.0);

  for (int i = 0; i < 50; ++i) {
    TTStarGPoint p{s.rotation(), {s.vec3()}, {s.vec3()}, {s.vec3()}};
    TTStarGPoint back = beta_inv(G, beta(G, p));
    CHECK(dist(back.g, p.g) == 0.0);
    CHECK((back.mu.coords - p.mu.coords).norm() < 1e-13);
    CHECK((back.xi_bar.coords - p.xi_bar.coords).norm() < 1e-13);
    CHECK((back.mu_tilde.coords - p.mu_tilde.coords).norm() < 1e-13);
  }
}

TEST_CASE("beta_inv") {
  const LieGroup& G = so3();
  Sampler s(304);

  // Forward-map oracle: beta_inv of the beta example restores the input.
  TTStarGPoint p = beta_inv(G, {identity(), cv(0, 1, 0), cv(0, 0, -1), av(-1, 0, 0)});
  CHECK((p.mu.coords - Eigen::Vector3d(0, 1, 0)).norm() == 0.0);
  CHECK((p.xi_bar.coords - Eigen::Vector3d(1, 0, 0)).norm() == 0.0);
  CHECK(p.mu_tilde.norm() == 0.0);

  for (int i = 0; i < 50; ++i) {
    TStarTStarGPoint q{s.rotation(), {s.vec3()}, {s.vec3()}, {s.vec3()}};
    TStarTStarGPoint back = beta(G, beta_inv(G, q));
    CHECK(dist(back.g, q.g) == 0.0);
    CHECK((back.mu.coords - q.mu.coords).norm() < 1e-13);
    CHECK((back.nu.coords - q.nu.coords).norm() < 1e-13);
    CHECK((back.eta.coords - q.eta.coords).norm() < 1e-13);
  }
}

TEST_CASE("kappa") {
  const LieGroup& G = so3();
  Sampler s(305);

  for (int i = 0; i < 20; ++i) {
    GroupElement g = s.rotation();
    AlgebraVector xi{s.vec3()}, zeta{s.vec3()};
    TTGPoint fixed = kappa(G, {g, xi, xi, zeta});
    CHECK(dist(fixed.g, g) == 0.0);
    CHECK((fixed.xi.coords - xi.coords).norm() == 0.0);
    CHECK((fixed.xi_bar.coords - xi.coords).norm() == 0.0);
    CHECK((fixed.xi_tilde.coords - zeta.coords).norm() == 0.0);
  }

  TTGPoint q = kappa(G, {identity(), av(1, 0, 0), av(0, 1, 0), av(0, 0, 0)});
  CHECK((q.xi.coords - Eigen::Vector3d(0, 1, 0)).norm() == 0.0);
  CHECK((q.xi_bar.coords - Eigen::Vector3d(1, 0, 0)).norm() == 0.0);
  CHECK((q.xi_tilde.coords - Eigen::Vector3d(0, 0, 1)).norm() == 0.0);

  for (int i = 0; i < 50; ++i) {
    TTGPoint p{s.rotation(), {s.vec3()}, {s.vec3()}, {s.vec3()}};
    TTGPoint back = kappa(G, kappa(G, p));
    CHECK(dist(back.g, p.g) == 0.0);
    CHECK((back.xi.coords - p.xi.coords).norm() == 0.0);
    CHECK((back.xi_bar.coords - p.xi_bar.coords).norm() == 0.0);
    CHECK((back.xi_tilde.coords - p.xi_tilde.coords).norm() < 1e-14);
  }
}

TEST_CASE("phi") {
  const LieGroup& G = so3();
  Sampler s(306);

  for (int i = 0; i < 20; ++i) {
    CotangentPoint a{s.rotation(), {s.vec3()}};
    CotangentPoint b{s.rotation(), {Eigen::Vector3d::Zero()}};
    ProductCotangentPoint p = phi(a, b);
    CHECK(dist(p.g, a.g) == 0.0);
    CHECK(dist(p.h, b.g) == 0.0);
    CHECK((p.mu.coords - a.mu.coords).norm() == 0.0);
    CHECK(p.nu.norm() == 0.0);
  }

  ProductCotangentPoint p = phi({identity(), cv(1, 0, 0)}, {identity(), cv(0, 1, 0)});
  CHECK((p.mu.coords - Eigen::Vector3d(1, 0, 0)).norm() == 0.0);
  CHECK((p.nu.coords - Eigen::Vector3d(0, -1, 0)).norm() == 0.0);

  for (int i = 0; i < 50; ++i) {
    CotangentPoint a{s.rotation(), {s.vec3()}};
    CotangentPoint b{s.rotation(), {s.vec3()}};
    auto [aa, bb] = phi_inv(phi(a, b));
    CHECK(dist(aa.g, a.g) == 0.0);
    CHECK((aa.mu.coords - a.mu.coords).norm() == 0.0);
    CHECK(dist(bb.g, b.g) == 0.0);
    CHECK((bb.mu.coords - b.mu.coords).norm() == 0.0);
  }
}

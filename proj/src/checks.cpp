#include "geomint/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "geomint/errors.hpp"
#include "geomint/integrators.hpp"
#include "geomint/lifts.hpp"
#include "geomint/reference.hpp"
#include "geomint/retraction.hpp"
#include "geomint/tulczyjew.hpp"

namespace geomint {

namespace {

constexpr int kSamples = 500;

struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double gauss() { return normal(engine); }
  double uniform() { return unit(engine); }

  Eigen::Vector3d vec3(double scale = 1.0) {
    return scale * Eigen::Vector3d(gauss(), gauss(), gauss());
  }

  // Direction uniform on the sphere, magnitude uniform in (0, radius).
  Eigen::Vector3d ball3(double radius) {
    Eigen::Vector3d v = vec3();
    while (v.norm() < 1e-12) v = vec3();
    return (radius * uniform()) * v.normalized();
  }

  GroupElement rotation() {
    Eigen::Quaterniond q(gauss(), gauss(), gauss(), gauss());
    q.normalize();
    return {GroupId::SO3, q.toRotationMatrix()};
  }

  std::mt19937_64 engine;
  std::normal_distribution<double> normal{0.0, 1.0};
  std::uniform_real_distribution<double> unit{0.0, 1.0};
};

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed) : name_(std::move(name)), rng_(seed) {}

  void sampled(const std::string& check, double tol, int samples,
               const std::function<double(Rng&)>& defect) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) worst = std::max(worst, defect(rng_));
    results_.push_back({name_, check, std::isfinite(worst) && worst <= tol, worst, tol});
  }

  void single(const std::string& check, double tol, double defect) {
    results_.push_back({name_, check, std::isfinite(defect) && defect <= tol, defect, tol});
  }

  void flag(const std::string& check, bool ok) {
    results_.push_back({name_, check, ok, ok ? 0.0 : 1.0, 0.0});
  }

  Rng& rng() { return rng_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string name_;
  Rng rng_;
  std::vector<CheckResult> results_;
};

double dist(const GroupElement& a, const GroupElement& b) { return (a.rep - b.rep).norm(); }
double dist(const AlgebraVector& a, const AlgebraVector& b) {
  return (a.coords - b.coords).norm();
}
double dist(const CoalgebraVector& a, const CoalgebraVector& b) {
  return (a.coords - b.coords).norm();
}
double dist(const TangentPoint& a, const TangentPoint& b) {
  return dist(a.g, b.g) + dist(a.xi, b.xi);
}
double dist(const CotangentPoint& a, const CotangentPoint& b) {
  return dist(a.g, b.g) + dist(a.mu, b.mu);
}
double dist(const TTGPoint& a, const TTGPoint& b) {
  return dist(a.g, b.g) + dist(a.xi, b.xi) + dist(a.xi_bar, b.xi_bar) +
         dist(a.xi_tilde, b.xi_tilde);
}
double dist(const TTStarGPoint& a, const TTStarGPoint& b) {
  return dist(a.g, b.g) + dist(a.mu, b.mu) + dist(a.xi_bar, b.xi_bar) +
         dist(a.mu_tilde, b.mu_tilde);
}

TangentPoint random_tangent(Rng& r) {
  return {r.rotation(), {r.vec3()}};
}
CotangentPoint random_cotangent(Rng& r) {
  return {r.rotation(), {r.vec3()}};
}
TTGPoint random_ttg(Rng& r) {
  return {r.rotation(), {r.vec3()}, {r.vec3()}, {r.vec3()}};
}
TTStarGPoint random_ttstarg(Rng& r) {
  return {r.rotation(), {r.vec3()}, {r.vec3()}, {r.vec3()}};
}

// Forward difference of the left-trivialized tau increment.
AlgebraVector fd_dtau(const LieGroup& G, const TauMap& tau, const AlgebraVector& xi,
                      const AlgebraVector& eta, double h) {
  Eigen::MatrixXd m =
      (G.inverse(tau.tau(xi)).rep * tau.tau(xi + h * eta).rep - Eigen::Matrix3d::Identity()) / h;
  return G.vee(0.5 * (m - m.transpose()));
}

std::vector<CheckResult> suite_algebra(std::uint64_t seed) {
  Suite s("algebra", seed);
  const LieGroup& G = so3();

  s.sampled("compose-associative", 1e-12, kSamples, [&](Rng& r) {
    GroupElement a = r.rotation(), b = r.rotation(), c = r.rotation();
    return dist(G.compose(G.compose(a, b), c), G.compose(a, G.compose(b, c)));
  });
  s.sampled("identity-neutral", 1e-12, kSamples, [&](Rng& r) {
    GroupElement a = r.rotation(), e = G.identity();
    return dist(G.compose(a, e), a) + dist(G.compose(e, a), a);
  });
  s.sampled("inverse", 1e-12, kSamples, [&](Rng& r) {
    GroupElement a = r.rotation(), e = G.identity();
    return dist(G.compose(a, G.inverse(a)), e) + dist(G.compose(G.inverse(a), a), e);
  });
  s.sampled("Ad-homomorphism", 1e-12, kSamples, [&](Rng& r) {
    GroupElement g = r.rotation(), h = r.rotation();
    AlgebraVector xi{r.vec3()};
    return dist(G.Ad(G.compose(g, h), xi), G.Ad(g, G.Ad(h, xi)));
  });
  s.sampled("coAd-contravariant", 1e-12, kSamples, [&](Rng& r) {
    GroupElement g = r.rotation(), h = r.rotation();
    CoalgebraVector mu{r.vec3()};
    return dist(G.coAd(g, G.coAd(h, mu)), G.coAd(G.compose(h, g), mu));
  });
  s.sampled("coAd-pairing-dual", 1e-12, kSamples, [&](Rng& r) {
    GroupElement g = r.rotation();
    CoalgebraVector mu{r.vec3()};
    AlgebraVector xi{r.vec3()};
    return std::abs(pairing(G.coAd(g, mu), xi) - pairing(mu, G.Ad(g, xi)));
  });
  s.sampled("ad-star-pairing-dual", 1e-12, kSamples, [&](Rng& r) {
    CoalgebraVector mu{r.vec3()};
    AlgebraVector xi{r.vec3()}, eta{r.vec3()};
    return std::abs(pairing(G.ad_star(xi, mu), eta) - pairing(mu, G.bracket(xi, eta)));
  });
  s.sampled("bracket-antisymmetric-jacobi", 1e-12, kSamples, [&](Rng& r) {
    AlgebraVector x{r.vec3()}, y{r.vec3()}, z{r.vec3()};
    double anti = (G.bracket(x, y) + G.bracket(y, x)).norm();
    AlgebraVector jac = G.bracket(x, G.bracket(y, z)) + G.bracket(y, G.bracket(z, x)) +
                        G.bracket(z, G.bracket(x, y));
    return anti + jac.norm();
  });
  s.sampled("hat-vee-roundtrip", 0.0, kSamples, [&](Rng& r) {
    AlgebraVector xi{r.vec3()};
    return dist(G.vee(G.hat(xi)), xi);
  });
  s.sampled("hat-is-bracket", 1e-14, kSamples, [&](Rng& r) {
    AlgebraVector xi{r.vec3()}, eta{r.vec3()};
    return (G.hat(xi) * eta.coords - G.bracket(xi, eta).coords).norm();
  });
  s.sampled("project-fixes-rotations", 1e-12, kSamples, [&](Rng& r) {
    GroupElement g = r.rotation();
    return dist(G.project_to_group(g), g);
  });
  s.sampled("project-orthogonalizes", 1e-12, kSamples, [&](Rng& r) {
    GroupElement g = r.rotation();
    g.rep += 1e-3 * Eigen::Matrix3d(Eigen::Matrix3d::NullaryExpr(
                        [&r](Eigen::Index, Eigen::Index) { return r.gauss(); }));
    GroupElement p = G.project_to_group(g);
    double orth = (p.rep.transpose() * p.rep - Eigen::Matrix3d::Identity()).norm();
    double det = std::abs(p.rep.determinant() - 1.0);
    return orth + det;
  });
  return s.take();
}

std::vector<CheckResult> suite_bundles(std::uint64_t seed) {
  Suite s("bundles", seed);
  const LieGroup& G = so3();

  s.sampled("tg-associative", 1e-12, kSamples, [&](Rng& r) {
    TangentPoint a = random_tangent(r), b = random_tangent(r), c = random_tangent(r);
    return dist(tg_mult(G, tg_mult(G, a, b), c), tg_mult(G, a, tg_mult(G, b, c)));
  });
  s.sampled("tg-identity-inverse", 1e-12, kSamples, [&](Rng& r) {
    TangentPoint a = random_tangent(r), e = tg_identity(G);
    return dist(tg_mult(G, a, e), a) + dist(tg_mult(G, e, a), a) +
           dist(tg_mult(G, a, tg_inverse(G, a)), e) + dist(tg_mult(G, tg_inverse(G, a), a), e);
  });
  s.sampled("tg-fiber-addition", 0.0, kSamples, [&](Rng& r) {
    TangentPoint a{G.identity(), {r.vec3()}}, b{G.identity(), {r.vec3()}};
    TangentPoint ab = tg_mult(G, a, b);
    return dist(ab.g, G.identity()) + (ab.xi.coords - (a.xi.coords + b.xi.coords)).norm();
  });
  s.sampled("tstarg-associative", 1e-12, kSamples, [&](Rng& r) {
    CotangentPoint a = random_cotangent(r), b = random_cotangent(r), c = random_cotangent(r);
    return dist(tstarg_mult(G, tstarg_mult(G, a, b), c),
                tstarg_mult(G, a, tstarg_mult(G, b, c)));
  });
  s.sampled("tstarg-identity-inverse", 1e-12, kSamples, [&](Rng& r) {
    CotangentPoint a = random_cotangent(r), e = tstarg_identity(G);
    return dist(tstarg_mult(G, a, e), a) + dist(tstarg_mult(G, e, a), a) +
           dist(tstarg_mult(G, a, tstarg_inverse(G, a)), e) +
           dist(tstarg_mult(G, tstarg_inverse(G, a), a), e);
  });
  s.sampled("ttg-associative", 1e-12, kSamples, [&](Rng& r) {
    TTGPoint a = random_ttg(r), b = random_ttg(r), c = random_ttg(r);
    return dist(ttg_mult(G, ttg_mult(G, a, b), c), ttg_mult(G, a, ttg_mult(G, b, c)));
  });
  s.sampled("ttg-identity-inverse", 1e-12, kSamples, [&](Rng& r) {
    TTGPoint a = random_ttg(r), e = ttg_identity(G);
    return dist(ttg_mult(G, a, e), a) + dist(ttg_mult(G, e, a), a) +
           dist(ttg_mult(G, a, ttg_inverse(G, a)), e) +
           dist(ttg_mult(G, ttg_inverse(G, a), a), e);
  });
  s.sampled("ttg-pr12-homomorphism", 1e-13, kSamples, [&](Rng& r) {
    TTGPoint a = random_ttg(r), b = random_ttg(r);
    return dist(pr12(ttg_mult(G, a, b)), tg_mult(G, pr12(a), pr12(b)));
  });
  return s.take();
}

std::vector<CheckResult> suite_tulczyjew(std::uint64_t seed) {
  Suite s("tulczyjew", seed);
  const LieGroup& G = so3();

  s.sampled("kappa-involution", 1e-14, kSamples, [&](Rng& r) {
    TTGPoint p = random_ttg(r);
    return dist(kappa(G, kappa(G, p)), p);
  });
  s.sampled("kappa-swaps-projections", 0.0, kSamples, [&](Rng& r) {
    TTGPoint p = random_ttg(r);
    return dist(pr12(kappa(G, p)), pr13(p));
  });
  s.sampled("alpha-roundtrip", 1e-13, kSamples, [&](Rng& r) {
    TTStarGPoint p = random_ttstarg(r);
    TStarTGPoint q{r.rotation(), {r.vec3()}, {r.vec3()}, {r.vec3()}};
    return dist(alpha_inv(G, alpha(G, p)), p) +
           dist(alpha(G, alpha_inv(G, q)).g, q.g) +
           dist(alpha(G, alpha_inv(G, q)).xi, q.xi) +
           dist(alpha(G, alpha_inv(G, q)).p_bar, q.p_bar) +
           dist(alpha(G, alpha_inv(G, q)).p_tilde, q.p_tilde);
  });
  s.sampled("beta-roundtrip", 1e-13, kSamples, [&](Rng& r) {
    TTStarGPoint p = random_ttstarg(r);
    TStarTStarGPoint q{r.rotation(), {r.vec3()}, {r.vec3()}, {r.vec3()}};
    TStarTStarGPoint qq = beta(G, beta_inv(G, q));
    return dist(beta_inv(G, beta(G, p)), p) + dist(qq.g, q.g) + dist(qq.mu, q.mu) +
           dist(qq.nu, q.nu) + dist(qq.eta, q.eta);
  });
  s.sampled("phi-roundtrip", 0.0, kSamples, [&](Rng& r) {
    CotangentPoint a = random_cotangent(r), b = random_cotangent(r);
    auto [aa, bb] = phi_inv(phi(a, b));
    return dist(aa, a) + dist(bb, b);
  });
  s.sampled("base-slot-fixed", 0.0, kSamples, [&](Rng& r) {
    TTStarGPoint p = random_ttstarg(r);
    TTGPoint q = random_ttg(r);
    return dist(alpha(G, p).g, p.g) + dist(beta(G, p).g, p.g) + dist(kappa(G, q).g, q.g);
  });
  s.sampled("alpha-beta-chain", 1e-13, kSamples, [&](Rng& r) {
    TStarTGPoint q{r.rotation(), {r.vec3()}, {r.vec3()}, {r.vec3()}};
    TTStarGPoint mid = alpha_inv(G, q);
    TStarTGPoint back = alpha(G, beta_inv(G, beta(G, mid)));
    return dist(back.g, q.g) + dist(back.xi, q.xi) + dist(back.p_bar, q.p_bar) +
           dist(back.p_tilde, q.p_tilde);
  });
  return s.take();
}

std::vector<CheckResult> suite_retraction(std::uint64_t seed) {
  Suite s("retraction", seed);
  const LieGroup& G = so3();
  const double fd_h = 1e-6;

  for (TauKind kind : {TauKind::Exponential, TauKind::Cayley}) {
    auto tau = make_tau(G, kind);
    std::string tag = kind == TauKind::Exponential ? "exp" : "cayley";

    s.single(tag + "/tau-at-zero", 0.0,
             dist(tau->tau({Eigen::Vector3d::Zero()}), G.identity()));
    s.sampled(tag + "/tau-opposite-inverse", 1e-12, kSamples, [&](Rng& r) {
      AlgebraVector xi{r.ball3(3.0)};
      return dist(G.compose(tau->tau(xi), tau->tau(-xi)), G.identity());
    });
    s.sampled(tag + "/tau-roundtrip", 1e-12, kSamples, [&](Rng& r) {
      AlgebraVector xi{r.ball3(3.0)};
      return dist(tau->tau_inv(tau->tau(xi)), xi);
    });
    s.sampled(tag + "/dtauL-matches-fd", 1e-5, kSamples, [&](Rng& r) {
      AlgebraVector xi{r.ball3(1.5)}, eta{r.vec3()};
      return dist(tau->dtauL(xi, eta), fd_dtau(G, *tau, xi, eta, fd_h));
    });
    s.sampled(tag + "/dtauL-inv-roundtrip", 1e-11, kSamples, [&](Rng& r) {
      AlgebraVector xi{r.ball3(2.0)}, eta{r.vec3()};
      return dist(tau->dtauL_inv(xi, tau->dtauL(xi, eta)), eta) +
             dist(tau->dtauL(xi, tau->dtauL_inv(xi, eta)), eta);
    });
    s.sampled(tag + "/dtauL-dual-adjoint", 1e-12, kSamples, [&](Rng& r) {
      AlgebraVector xi{r.ball3(2.0)}, eta{r.vec3()};
      CoalgebraVector mu{r.vec3()};
      return std::abs(pairing(tau->dtauL_dual(xi, mu), eta) - pairing(mu, tau->dtauL(xi, eta))) +
             std::abs(pairing(tau->dtauL_dual_inv(xi, mu), eta) -
                      pairing(mu, tau->dtauL_inv(xi, eta)));
    });
    s.sampled(tag + "/dtauL-dual-inv-roundtrip", 1e-11, kSamples, [&](Rng& r) {
      AlgebraVector xi{r.ball3(2.0)};
      CoalgebraVector mu{r.vec3()};
      return dist(tau->dtauL_dual_inv(xi, tau->dtauL_dual(xi, mu)), mu);
    });

    for (double theta : {0.0, 0.25, 0.5, 1.0}) {
      DiscretizationMap map(tau, theta);
      std::string ttag = tag + "/theta-" + std::to_string(theta).substr(0, 4);

      s.sampled(ttag + "/rd-diagonal-at-zero", 0.0, 50, [&](Rng& r) {
        GroupElement g = r.rotation();
        auto legs = map.rd(g, {Eigen::Vector3d::Zero()});
        return dist(legs.first, g) + dist(legs.second, g);
      });
      s.sampled(ttag + "/rd-roundtrip", 1e-11, kSamples, [&](Rng& r) {
        GroupElement g = r.rotation();
        AlgebraVector xi{r.ball3(2.0)};
        auto legs = map.rd(g, xi);
        auto [gg, xx] = map.rd_inv(legs.first, legs.second);
        return dist(gg, g) + dist(xx, xi);
      });
      s.sampled(ttag + "/rd-inv-roundtrip", 1e-11, kSamples, [&](Rng& r) {
        GroupElement g0 = r.rotation();
        GroupElement g1 = G.compose(g0, tau->tau({r.ball3(2.0)}));
        auto [gg, xx] = map.rd_inv(g0, g1);
        auto legs = map.rd(gg, xx);
        return dist(legs.first, g0) + dist(legs.second, g1);
      });
      s.sampled(ttag + "/rd-velocity-separation", 1e-8, 100, [&](Rng& r) {
        GroupElement g = r.rotation();
        AlgebraVector xi{r.vec3()};
        auto plus = map.rd(g, fd_h * xi);
        auto minus = map.rd(g, -fd_h * xi);
        auto vel = [&](const GroupElement& p, const GroupElement& m) {
          Eigen::MatrixXd d = (G.inverse(g).rep * (p.rep - m.rep)) / (2.0 * fd_h);
          return G.vee(0.5 * (d - d.transpose()));
        };
        AlgebraVector v1 = vel(plus.first, minus.first);
        AlgebraVector v2 = vel(plus.second, minus.second);
        return dist(v2 - v1, xi);
      });
      s.sampled(ttag + "/rd-inv-newton-agrees", 1e-10, 50, [&](Rng& r) {
        GroupElement g0 = r.rotation();
        GroupElement g1 = G.compose(g0, tau->tau({r.ball3(2.0)}));
        auto [ga, xa] = map.rd_inv(g0, g1);
        auto [gb, xb] = map.rd_inv_newton(g0, g1);
        return dist(ga, gb) + dist(xa, xb);
      });
    }

    bool domain_ok = false;
    try {
      tau->tau_inv({GroupId::SO3,
                    Eigen::AngleAxisd(std::numbers::pi - 1e-12, Eigen::Vector3d::UnitZ())
                        .toRotationMatrix()});
    } catch (const OutOfDomainError&) {
      domain_ok = true;
    }
    s.flag(tag + "/tau-inv-domain-guard", domain_ok);
  }

  // tau itself is total; only tau_inv enforces the injectivity domain.
  GroupElement half_turn =
      make_tau(G, TauKind::Exponential)->tau({Eigen::Vector3d(0.0, 0.0, std::numbers::pi)});
  s.single("exp/tau-total-at-pi", 1e-14,
           (half_turn.rep - Eigen::Vector3d(-1.0, -1.0, 1.0).asDiagonal().toDenseMatrix())
               .norm());

  return s.take();
}

std::vector<CheckResult> suite_lifts(std::uint64_t seed) {
  Suite s("lifts", seed);
  const LieGroup& G = so3();
  const double fd_h = 1e-6;

  for (TauKind kind : {TauKind::Exponential, TauKind::Cayley}) {
    auto tau = make_tau(G, kind);
    DiscretizationMap map(tau, 0.0);
    std::string tag = kind == TauKind::Exponential ? "exp" : "cayley";

    auto random_lift_input = [&](Rng& r) {
      return TTGPoint{r.rotation(), {r.vec3()}, {r.ball3(1.0)}, {r.vec3()}};
    };
    auto random_colift_input = [&](Rng& r) {
      return TTStarGPoint{r.rotation(), {r.vec3()}, {r.ball3(1.0)}, {r.vec3()}};
    };

    s.sampled(tag + "/tangent-lift-roundtrip", 1e-10, kSamples, [&](Rng& r) {
      TTGPoint p = random_lift_input(r);
      auto [a, b] = tangent_lift(map, p);
      return dist(tangent_lift_inverse(map, a, b), p);
    });
    s.sampled(tag + "/tangent-lift-inverse-roundtrip", 1e-10, kSamples, [&](Rng& r) {
      TangentPoint a{r.rotation(), {r.vec3()}};
      TangentPoint b{G.compose(a.g, tau->tau({r.ball3(1.0)})), {r.vec3()}};
      TTGPoint p = tangent_lift_inverse(map, a, b);
      auto [aa, bb] = tangent_lift(map, p);
      return dist(aa, a) + dist(bb, b);
    });
    s.sampled(tag + "/cotangent-lift-roundtrip", 1e-10, kSamples, [&](Rng& r) {
      TTStarGPoint p = random_colift_input(r);
      auto [a, b] = cotangent_lift(map, p);
      return dist(cotangent_lift_inverse(map, a, b), p);
    });
    s.sampled(tag + "/cotangent-lift-inverse-roundtrip", 1e-10, kSamples, [&](Rng& r) {
      CotangentPoint a{r.rotation(), {r.vec3()}};
      CotangentPoint b{G.compose(a.g, tau->tau({r.ball3(1.0)})), {r.vec3()}};
      TTStarGPoint p = cotangent_lift_inverse(map, a, b);
      auto [aa, bb] = cotangent_lift(map, p);
      return dist(aa, a) + dist(bb, b);
    });
    s.sampled(tag + "/cotangent-map-roundtrip", 1e-11, kSamples, [&](Rng& r) {
      ProductCotangentPoint p{r.rotation(), GroupElement{}, {r.vec3()}, {r.vec3()}};
      p.h = G.compose(p.g, tau->tau({r.ball3(1.0)}));
      ProductCotangentPoint q = cotangent_map_of_rd_inverse(map, cotangent_map_of_rd(map, p));
      return dist(q.g, p.g) + dist(q.h, p.h) + dist(q.mu, p.mu) + dist(q.nu, p.nu);
    });
    s.sampled(tag + "/tangent-lift-first-leg-projection", 0.0, kSamples, [&](Rng& r) {
      TTGPoint p = random_lift_input(r);
      return dist(tangent_lift(map, p).first, pr12(p));
    });
    s.sampled(tag + "/cotangent-lift-bases-are-rd", 0.0, kSamples, [&](Rng& r) {
      TTStarGPoint p = random_colift_input(r);
      auto [a, b] = cotangent_lift(map, p);
      auto legs = map.rd(p.g, p.xi_bar);
      return dist(a.g, legs.first) + dist(b.g, legs.second);
    });
    s.sampled(tag + "/tangent-lift-closed-form", 1e-13, kSamples, [&](Rng& r) {
      TTGPoint p = random_lift_input(r);
      GroupElement inc = tau->tau(p.xi_bar);
      AlgebraVector expected = G.Ad(G.inverse(inc), p.xi) +
                               tau->dtauL(p.xi_bar, p.xi_tilde + G.bracket(p.xi, p.xi_bar));
      auto [a, b] = tangent_lift(map, p);
      return dist(b.g, G.compose(p.g, inc)) + dist(b.xi, expected) + dist(a, pr12(p));
    });
    s.sampled(tag + "/cotangent-lift-closed-form", 1e-12, kSamples, [&](Rng& r) {
      TTStarGPoint p = random_colift_input(r);
      GroupElement inc = tau->tau(p.xi_bar);
      CoalgebraVector b_cov = tau->dtauL_dual_inv(p.xi_bar, p.mu);
      CoalgebraVector first_mu = p.mu_tilde - G.coAd(G.inverse(inc), b_cov);
      auto [a, b] = cotangent_lift(map, p);
      return dist(a.mu, first_mu) + dist(b.mu, -b_cov);
    });
    s.sampled(tag + "/tangent-of-rd-matches-fd", 1e-5, 100, [&](Rng& r) {
      TTGPoint p{r.rotation(), {r.ball3(1.0)}, {r.vec3()}, {r.vec3()}};
      auto closed = tangent_of_rd(map, p);
      auto legs_at = [&](double h) {
        GroupElement gh = G.compose(p.g, tau->tau(h * p.xi_bar));
        return map.rd(gh, p.xi + h * p.xi_tilde);
      };
      auto plus = legs_at(fd_h), minus = legs_at(-fd_h);
      auto vel = [&](const GroupElement& at, const GroupElement& pl, const GroupElement& mi) {
        Eigen::MatrixXd d = (G.inverse(at).rep * (pl.rep - mi.rep)) / (2.0 * fd_h);
        return G.vee(0.5 * (d - d.transpose()));
      };
      return dist(closed.first.xi, vel(closed.first.g, plus.first, minus.first)) +
             dist(closed.second.xi, vel(closed.second.g, plus.second, minus.second));
    });
    s.sampled(tag + "/tangent-of-rd-linear", 1e-12, 100, [&](Rng& r) {
      GroupElement g = r.rotation();
      AlgebraVector xi{r.ball3(1.0)};
      AlgebraVector z1{r.vec3()}, e1{r.vec3()}, z2{r.vec3()}, e2{r.vec3()};
      double a = r.gauss(), b = r.gauss();
      auto u = tangent_of_rd(map, {g, xi, z1, e1});
      auto v = tangent_of_rd(map, {g, xi, z2, e2});
      auto w = tangent_of_rd(map, {g, xi, a * z1 + b * z2, a * e1 + b * e2});
      return dist(w.first.xi, a * u.first.xi + b * v.first.xi) +
             dist(w.second.xi, a * u.second.xi + b * v.second.xi);
    });
    s.sampled(tag + "/cotangent-lift-linear", 1e-12, 100, [&](Rng& r) {
      GroupElement g = r.rotation();
      AlgebraVector xi_bar{r.ball3(1.0)};
      CoalgebraVector m1{r.vec3()}, n1{r.vec3()}, m2{r.vec3()}, n2{r.vec3()};
      double a = r.gauss(), b = r.gauss();
      auto u = cotangent_lift(map, {g, m1, xi_bar, n1});
      auto v = cotangent_lift(map, {g, m2, xi_bar, n2});
      auto w = cotangent_lift(map, {g, a * m1 + b * m2, xi_bar, a * n1 + b * n2});
      return dist(w.first.mu, a * u.first.mu + b * v.first.mu) +
             dist(w.second.mu, a * u.second.mu + b * v.second.mu);
    });

    // The theta != 0 tangent map is finite differences only; cross-check it
    // against the per-leg closed form.
    DiscretizationMap half(tau, 0.5);
    s.sampled(tag + "/tangent-of-rd-theta-half-fd", 1e-5, 100, [&](Rng& r) {
      TTGPoint p{r.rotation(), {r.ball3(1.0)}, {r.vec3()}, {r.vec3()}};
      auto got = tangent_of_rd(half, p);
      AlgebraVector v1 = G.Ad(tau->tau(0.5 * p.xi), p.xi_bar) +
                         tau->dtauL(-0.5 * p.xi, -0.5 * p.xi_tilde);
      AlgebraVector v2 = G.Ad(tau->tau(-0.5 * p.xi), p.xi_bar) +
                         tau->dtauL(0.5 * p.xi, 0.5 * p.xi_tilde);
      return dist(got.first.xi, v1) + dist(got.second.xi, v2);
    });

    bool guard = false;
    try {
      cotangent_lift(half, {G.identity(), {Eigen::Vector3d::UnitX()},
                            {Eigen::Vector3d::UnitY()}, {Eigen::Vector3d::UnitZ()}});
    } catch (const std::invalid_argument&) {
      guard = true;
    }
    s.flag(tag + "/cotangent-lift-theta-guard", guard);
  }

  return s.take();
}

std::vector<CheckResult> suite_integrators(std::uint64_t seed) {
  Suite s("integrators", seed);
  const LieGroup& G = so3();
  InertiaOperator inertia = InertiaOperator::diagonal(Eigen::Vector3d(1.0, 2.0, 3.0));
  Eigen::Vector3d mu0 = Eigen::Vector3d(1.0, 1.0, 1.0) / std::sqrt(3.0);
  auto exp_tau = make_tau(G, TauKind::Exponential);
  DiscretizationMap map(exp_tau, 0.0);

  {
    IntegratorConfig cfg;
    cfg.step = 1e-2;
    LiePoissonState st{G.identity(), {mu0}};
    GroupElement orbit = G.identity();
    double casimir_drift = 0.0, orth = 0.0, orbit_defect = 0.0, residual = 0.0;
    for (int k = 0; k < 10000; ++k) {
      LiePoissonState next = lie_poisson_step(inertia, cfg, map, st);
      if (k < 1000) {
        residual = std::max(residual, lie_poisson_step_residual(inertia, cfg, map, st, next));
      }
      st = next;
      casimir_drift =
          std::max(casimir_drift, std::abs(st.mu.norm() - mu0.norm()) / mu0.norm());
      orth = std::max(orth, (st.g.rep.transpose() * st.g.rep - Eigen::Matrix3d::Identity())
                               .norm());
      orbit = G.compose(G.inverse(G.identity()), st.g);
      orbit_defect =
          std::max(orbit_defect, (st.mu.coords - G.coAd(orbit, {mu0}).coords).norm());
    }
    s.single("lp-casimir-relative-drift", 1e-12, casimir_drift);
    s.single("lp-orthogonality-defect", 1e-8, orth);
    s.single("lp-coadjoint-orbit", 1e-11, orbit_defect);
    s.single("lp-step-residual", 1e-10, residual);
  }

  {
    IntegratorConfig cfg;
    cfg.step = 1e-2;
    auto cay = make_tau(G, TauKind::Cayley);
    DiscretizationMap cay_map(cay, 0.0);
    LiePoissonState st{G.identity(), {mu0}};
    double casimir_drift = 0.0, residual = 0.0;
    for (int k = 0; k < 1000; ++k) {
      LiePoissonState next = lie_poisson_step(inertia, cfg, cay_map, st);
      residual = std::max(residual, lie_poisson_step_residual(inertia, cfg, cay_map, st, next));
      st = next;
      casimir_drift =
          std::max(casimir_drift, std::abs(st.mu.norm() - mu0.norm()) / mu0.norm());
    }
    s.single("lp-cayley-casimir-relative-drift", 1e-12, casimir_drift);
    s.single("lp-cayley-step-residual", 1e-10, residual);
  }

  {
    IntegratorConfig cfg;
    cfg.step = 1e-2;
    EulerPoincareState st{G.identity(), inertia.apply_inverse({mu0})};
    double residual = 0.0;
    for (int k = 0; k < 1000; ++k) {
      EulerPoincareState next = euler_poincare_step(inertia, cfg, map, st);
      residual = std::max(residual, euler_poincare_step_residual(inertia, cfg, map, st, next));
      st = next;
    }
    s.single("ep-step-residual", 1e-10, residual);
  }

  {
    IntegratorConfig cfg;
    cfg.step = 1e-3;
    LiePoissonState lp{G.identity(), {mu0}};
    EulerPoincareState ep{G.identity(), inertia.apply_inverse({mu0})};
    LiePoissonState lp1 = lie_poisson_step(inertia, cfg, map, lp);
    EulerPoincareState ep1 = euler_poincare_step(inertia, cfg, map, ep);
    double defect = (inertia.apply(ep1.xi).coords - lp1.mu.coords).norm();
    s.single("ep-lp-legendre-consistency", 10.0 * cfg.step * cfg.step, defect);
  }

  {
    IntegratorConfig cfg;
    cfg.step = 1e-2;
    LiePoissonState st{G.identity(), {Eigen::Vector3d::UnitX()}};
    double mu_defect = 0.0, g_defect = 0.0;
    for (int k = 1; k <= 1000; ++k) {
      st = lie_poisson_step(inertia, cfg, map, st);
      mu_defect = std::max(mu_defect, (st.mu.coords - Eigen::Vector3d::UnitX()).norm());
      Eigen::Matrix3d expected =
          Eigen::AngleAxisd(k * cfg.step, Eigen::Vector3d::UnitX()).toRotationMatrix();
      g_defect = std::max(g_defect, (st.g.rep - expected).norm());
    }
    s.single("lp-relative-equilibrium-momentum", 1e-12, mu_defect);
    s.single("lp-relative-equilibrium-rotation", 1e-9, g_defect);
  }

  {
    IntegratorConfig cfg;
    cfg.step = 1e-3;
    LiePoissonState st{G.identity(), {mu0}};
    double h0 = 0.5 * pairing({mu0}, inertia.apply_inverse({mu0}));
    std::vector<double> dev;
    dev.reserve(10000);
    for (int k = 0; k < 10000; ++k) {
      st = lie_poisson_step(inertia, cfg, map, st);
      dev.push_back(std::abs(0.5 * pairing(st.mu, inertia.apply_inverse(st.mu)) - h0));
    }
    auto mean = [](auto first, auto last) {
      double acc = 0.0;
      for (auto it = first; it != last; ++it) acc += *it;
      return acc / static_cast<double>(std::distance(first, last));
    };
    double first_decile = mean(dev.begin(), dev.begin() + 1000);
    double last_decile = mean(dev.end() - 1000, dev.end());
    s.single("lp-energy-no-secular-drift", 2.0,
             first_decile > 0.0 ? last_decile / first_decile : 0.0);
  }

  {
    IntegratorConfig cfg;
    cfg.step = 1e-2;
    LiePoissonState st{G.identity(), {mu0}};
    LiePoissonState fwd = lie_poisson_step(inertia, cfg, map, st);
    IntegratorConfig back = cfg;
    back.orientation = FlowOrientation::Paper;
    LiePoissonState rewound = lie_poisson_step(inertia, back, map, fwd);
    s.single("lp-paper-reverses-forward", 1e-11,
             (rewound.mu.coords - st.mu.coords).norm() + dist(rewound.g, st.g));
  }

  {
    // First-order convergence toward the reference flow.
    LiePoissonState init{G.identity(), {mu0}};
    std::vector<double> errs;
    for (double t : {1e-2, 5e-3, 2.5e-3}) {
      long n = std::lround(1.0 / t);
      IntegratorConfig cfg;
      cfg.step = t;
      LiePoissonState st = init;
      for (long k = 0; k < n; ++k) st = lie_poisson_step(inertia, cfg, map, st);
      LiePoissonState ref = reference_oracle(inertia, init, n * t, 1e-12);
      errs.push_back(std::sqrt((st.mu.coords - ref.mu.coords).squaredNorm() +
                               (st.g.rep - ref.g.rep).squaredNorm()));
    }
    bool monotone = errs[0] > errs[1] && errs[1] > errs[2];
    double slope = std::log(errs[0] / errs[2]) / std::log(4.0);
    s.flag("lp-convergence-monotone", monotone);
    s.single("lp-convergence-slope-low", 2.2, slope);
    s.flag("lp-convergence-slope-high", slope >= 0.8);
  }

  {
    IntegratorConfig cfg;
    cfg.step = 0.05;
    Eigen::Vector3d axis(0.3, -0.4, 0.5);
    auto field = [&](const GroupElement&) { return AlgebraVector{axis}; };
    double worst = 0.0;
    for (double theta : {0.0, 0.5}) {
      DiscretizationMap m(exp_tau, theta);
      GroupElement g = G.identity();
      for (int k = 0; k < 100; ++k) g = group_flow_step(field, cfg, m, g);
      Eigen::Vector3d total = 100.0 * cfg.step * axis;
      Eigen::Matrix3d expected =
          Eigen::AngleAxisd(total.norm(), total.normalized()).toRotationMatrix();
      worst = std::max(worst, (g.rep - expected).norm());
    }
    s.single("group-flow-constant-field-exact", 1e-11, worst);
  }

  {
    bool diverged = false;
    auto bad = [](const AlgebraVector& xi) {
      return AlgebraVector{2.0 * xi.coords + Eigen::Vector3d(1.0, 0.0, 0.0)};
    };
    try {
      fixed_point_solve(bad, {Eigen::Vector3d::Zero()}, 1e-13, 100, SolverKind::FixedPoint);
    } catch (const SolverDivergedError&) {
      diverged = true;
    }
    s.flag("fixed-point-non-contraction-diverges", diverged);

    AlgebraVector newton_sol =
        fixed_point_solve(bad, {Eigen::Vector3d::Zero()}, 1e-13, 100, SolverKind::Newton);
    s.single("newton-solves-linear-residual", 1e-12,
             (newton_sol.coords - Eigen::Vector3d(-0.5, 0.0, 0.0)).norm());
  }

  return s.take();
}

}  // namespace

std::vector<std::string> check_suite_names() {
  return {"algebra", "bundles", "tulczyjew", "retraction", "lifts", "integrators"};
}

std::vector<CheckResult> run_check_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "algebra") return suite_algebra(seed);
  if (suite == "bundles") return suite_bundles(seed + 1);
  if (suite == "tulczyjew") return suite_tulczyjew(seed + 2);
  if (suite == "retraction") return suite_retraction(seed + 3);
  if (suite == "lifts") return suite_lifts(seed + 4);
  if (suite == "integrators") return suite_integrators(seed + 5);
  throw std::invalid_argument("unknown check suite: " + suite);
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
  std::vector<CheckResult> all;
  for (const std::string& name : check_suite_names()) {
    std::vector<CheckResult> part = run_check_suite(name, seed);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::uint64_t default_check_seed() {
  const char* env = std::getenv("GEOMINT_SEED");
  if (env == nullptr || *env == '\0') return 20260814ULL;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw ConfigError("GEOMINT_SEED must be an unsigned integer");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace geomint

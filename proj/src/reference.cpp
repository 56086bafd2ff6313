#include "geomint/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

#include "geomint/errors.hpp"

namespace geomint {

namespace {

// mu in [0,3), g row-major in [3,12).
using State = std::array<double, 12>;

State pack(const LiePoissonState& s) {
  State x{};
  for (int i = 0; i < 3; ++i) x[i] = s.mu.coords(i);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) x[3 + 3 * r + c] = s.g.rep(r, c);
  return x;
}

LiePoissonState unpack(const State& x) {
  Eigen::Vector3d mu(x[0], x[1], x[2]);
  Eigen::Matrix3d g;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) g(r, c) = x[3 + 3 * r + c];
  return {GroupElement{GroupId::SO3, g}, CoalgebraVector{mu}};
}

}  // namespace

LiePoissonState reference_oracle(const InertiaOperator& inertia, const LiePoissonState& initial,
                                 double t_total, double local_tol) {
  const LieGroup& G = so3();
  require_group(G, initial.g);
  if (inertia.dimension() != 3) {
    throw std::invalid_argument("reference_oracle: inertia must be 3x3");
  }
  if (!(t_total >= 0.0) || !std::isfinite(t_total)) {
    throw std::invalid_argument("reference_oracle: horizon must be nonnegative and finite");
  }
  if (!(local_tol > 0.0)) {
    throw std::invalid_argument("reference_oracle: tolerance must be positive");
  }
  if (t_total == 0.0) return initial;

  auto system = [&inertia](const State& x, State& dxdt, double) {
    Eigen::Vector3d mu(x[0], x[1], x[2]);
    Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>> g(&x[3]);
    Eigen::Vector3d omega = inertia.apply_inverse({mu}).coords;
    Eigen::Vector3d mu_dot = mu.cross(omega);
    Eigen::Matrix3d omega_hat;
    omega_hat << 0.0, -omega.z(), omega.y(), omega.z(), 0.0, -omega.x(), -omega.y(), omega.x(),
        0.0;
    Eigen::Matrix<double, 3, 3, Eigen::RowMajor> g_dot = g * omega_hat;
    for (int i = 0; i < 3; ++i) dxdt[i] = mu_dot(i);
    for (int i = 0; i < 9; ++i) dxdt[3 + i] = g_dot.data()[i];
  };

  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled<ode::runge_kutta_fehlberg78<State>>(local_tol, local_tol);

  State x = pack(initial);
  double t = 0.0;
  double dt = std::min(1e-2, t_total);
  const double dt_floor = 1e-15 * std::max(1.0, t_total);

  while (t_total - t > dt_floor) {
    double dt_try = std::min(dt, t_total - t);
    bool accepted = stepper.try_step(system, x, t, dt_try) == ode::success;
    dt = dt_try;
    if (accepted) {
      GroupElement g = G.project_to_group(unpack(x).g);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) x[3 + 3 * r + c] = g.rep(r, c);
    } else if (dt < dt_floor) {
      throw SolverDivergedError("reference_oracle: step size underflow", dt, 0);
    }
  }
  return unpack(x);
}

}  // namespace geomint

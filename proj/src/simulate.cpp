#include "geomint/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>
#include <utility>

#include "geomint/errors.hpp"
#include "geomint/integrators.hpp"
#include "geomint/reference.hpp"
#include "geomint/retraction.hpp"

namespace geomint {

namespace {

constexpr double kReferenceTol = 1e-12;
constexpr double kExactErrorFloor = 1e-9;

TrajectoryRecord make_record(long k, double time, const GroupElement& g,
                             const Eigen::Vector3d& m_column, const CoalgebraVector& mu,
                             const InertiaOperator& inertia) {
  TrajectoryRecord rec;
  rec.k = k;
  rec.time = time;
  rec.g = g.rep;
  rec.m = m_column;
  rec.energy = 0.5 * pairing(mu, inertia.apply_inverse(mu));
  rec.casimir = mu.norm();
  rec.orth_residual = (g.rep.transpose() * g.rep - Eigen::Matrix3d::Identity()).norm();
  return rec;
}

struct RunPieces {
  InertiaOperator inertia;
  DiscretizationMap map;
  IntegratorConfig icfg;
  GroupElement g0;
};

RunPieces prepare(const RunConfig& cfg) {
  InertiaOperator inertia(cfg.inertia);
  DiscretizationMap map(make_tau(so3(), cfg.tau), cfg.theta);
  IntegratorConfig icfg = integrator_config(cfg);
  validate_config(icfg);
  if (cfg.step_count < 1) throw ConfigError("steps must be at least 1");
  GroupElement g0{GroupId::SO3, cfg.initial_rotation};
  return {std::move(inertia), std::move(map), icfg, std::move(g0)};
}

}  // namespace

std::vector<TrajectoryRecord> run_simulation(const RunConfig& cfg) {
  RunPieces run = prepare(cfg);
  const InertiaOperator& inertia = run.inertia;
  std::vector<TrajectoryRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.step_count) + 1);

  switch (cfg.integrator) {
    case IntegratorChoice::LiePoisson: {
      LiePoissonState st{run.g0, {initial_momentum(cfg)}};
      records.push_back(make_record(0, 0.0, st.g, st.mu.coords, st.mu, inertia));
      for (long k = 1; k <= cfg.step_count; ++k) {
        st = lie_poisson_step(inertia, run.icfg, run.map, st);
        records.push_back(make_record(k, k * cfg.step, st.g, st.mu.coords, st.mu, inertia));
      }
      break;
    }
    case IntegratorChoice::EulerPoincare: {
      EulerPoincareState st{run.g0, {initial_velocity(cfg)}};
      CoalgebraVector mu = inertia.apply(st.xi);
      records.push_back(make_record(0, 0.0, st.g, st.xi.coords, mu, inertia));
      for (long k = 1; k <= cfg.step_count; ++k) {
        st = euler_poincare_step(inertia, run.icfg, run.map, st);
        mu = inertia.apply(st.xi);
        records.push_back(make_record(k, k * cfg.step, st.g, st.xi.coords, mu, inertia));
      }
      break;
    }
    case IntegratorChoice::Reference: {
      LiePoissonState st{run.g0, {initial_momentum(cfg)}};
      records.push_back(make_record(0, 0.0, st.g, st.mu.coords, st.mu, inertia));
      for (long k = 1; k <= cfg.step_count; ++k) {
        st = reference_oracle(inertia, st, cfg.step, kReferenceTol);
        records.push_back(make_record(k, k * cfg.step, st.g, st.mu.coords, st.mu, inertia));
      }
      break;
    }
  }
  return records;
}

void simulate(const RunConfig& cfg) {
  std::vector<TrajectoryRecord> records = run_simulation(cfg);
  if (cfg.output_format != "csv") {
    throw ConfigError("output_format must be \"csv\"");
  }
  write_trajectory_csv(cfg.output_path, records);
}

OrderStudyResult order_study(const RunConfig& cfg, const std::vector<double>& steps,
                             double total_time) {
  if (steps.size() < 3) {
    throw std::invalid_argument("order_study requires at least 3 step sizes");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!(steps[i] > 0.0) || !std::isfinite(steps[i])) {
      throw std::invalid_argument("order_study step sizes must be positive");
    }
    if (i > 0 && std::abs(steps[i] / steps[i - 1] - 0.5) > 1e-9) {
      throw std::invalid_argument("order_study step sizes must halve");
    }
  }
  if (!(total_time > 0.0) || !std::isfinite(total_time)) {
    throw std::invalid_argument("order_study total time must be positive");
  }

  RunPieces run = prepare(cfg);
  const InertiaOperator& inertia = run.inertia;
  GroupElement g0 = run.g0;
  CoalgebraVector mu0{initial_momentum(cfg)};

  auto terminal_error = [&](double step) {
    long n = std::lround(total_time / step);
    if (n < 1) n = 1;
    double horizon = n * step;
    LiePoissonState ref = reference_oracle(inertia, {g0, mu0}, horizon, kReferenceTol);

    IntegratorConfig icfg = run.icfg;
    icfg.step = step;
    GroupElement g = g0;
    CoalgebraVector mu = mu0;
    switch (cfg.integrator) {
      case IntegratorChoice::LiePoisson: {
        LiePoissonState st{g0, mu0};
        for (long k = 0; k < n; ++k) st = lie_poisson_step(inertia, icfg, run.map, st);
        g = st.g;
        mu = st.mu;
        break;
      }
      case IntegratorChoice::EulerPoincare: {
        EulerPoincareState st{g0, inertia.apply_inverse(mu0)};
        for (long k = 0; k < n; ++k) st = euler_poincare_step(inertia, icfg, run.map, st);
        g = st.g;
        mu = inertia.apply(st.xi);
        break;
      }
      case IntegratorChoice::Reference: {
        LiePoissonState st = reference_oracle(inertia, {g0, mu0}, horizon, kReferenceTol);
        g = st.g;
        mu = st.mu;
        break;
      }
    }
    double err = std::sqrt((mu.coords - ref.mu.coords).squaredNorm() +
                           (g.rep - ref.g.rep).squaredNorm());
    return OrderStudyRow{step, n, err};
  };

  std::vector<std::future<OrderStudyRow>> futures;
  futures.reserve(steps.size());
  for (double step : steps) {
    futures.push_back(std::async(std::launch::async, terminal_error, step));
  }

  OrderStudyResult result;
  for (auto& f : futures) result.rows.push_back(f.get());

  result.exact = true;
  for (const OrderStudyRow& row : result.rows) {
    if (row.error > kExactErrorFloor) result.exact = false;
  }
  result.monotone = true;
  for (std::size_t i = 1; i < result.rows.size(); ++i) {
    if (!(result.rows[i].error < result.rows[i - 1].error)) result.monotone = false;
  }

  if (!result.exact) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double n = static_cast<double>(result.rows.size());
    for (const OrderStudyRow& row : result.rows) {
      double x = std::log(row.step);
      double y = std::log(std::max(row.error, 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    result.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return result;
}

std::string format_order_report(const OrderStudyResult& result) {
  std::string out;
  char line[160];
  for (const OrderStudyRow& row : result.rows) {
    std::snprintf(line, sizeof line, "step=%.17g n=%ld error=%.17g\n", row.step,
                  row.step_count, row.error);
    out += line;
  }
  if (result.exact) {
    out += "slope=exact\n";
  } else {
    std::snprintf(line, sizeof line, "slope=%.6g monotone=%s\n", result.slope,
                  result.monotone ? "yes" : "no");
    out += line;
  }
  return out;
}

}  // namespace geomint

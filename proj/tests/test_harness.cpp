#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unistd.h>

#include "geomint/checks.hpp"
#include "geomint/config.hpp"
#include "geomint/errors.hpp"
#include "geomint/reference.hpp"
#include "geomint/simulate.hpp"
#include "helpers.hpp"

using namespace geomint;

namespace {

const char* kCanonicalJson = R"({
  "group": "SO3",
  "tau": "exp",
  "theta": 0.0,
  "step": 1e-2,
  "steps": 100,
  "inertia": [1.0, 2.0, 3.0],
  "initial_momentum": [0.57735026918962584, 0.57735026918962584, 0.57735026918962584],
  "integrator": "lie_poisson"
})";

std::string with_fields(const std::string& extra) {
  std::string base = kCanonicalJson;
  base.insert(base.rfind('}'), "," + extra);
  return base;
}

std::string without_field(const char* name) {
  std::istringstream in(kCanonicalJson);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find(std::string("\"") + name + "\"") != std::string::npos) continue;
    out << line << "\n";
  }
  std::string text = out.str();
  // Drop a dangling comma before the closing brace.
  auto brace = text.rfind('}');
  auto last = text.find_last_not_of(" \n", brace - 1);
  if (text[last] == ',') text.erase(last, 1);
  return text;
}

struct TempDir {
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("geomint_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::filesystem::path path;
};

}  // namespace

TEST_CASE("parse_run_config happy path") {
  RunConfig cfg = parse_run_config(kCanonicalJson);
  CHECK(cfg.tau == TauKind::Exponential);
  CHECK(cfg.theta == 0.0);
  CHECK(cfg.step == 1e-2);
  CHECK(cfg.step_count == 100);
  CHECK((cfg.inertia - Eigen::Vector3d(1, 2, 3).asDiagonal().toDenseMatrix()).norm() == 0.0);
  CHECK((cfg.initial_rotation - Eigen::Matrix3d::Identity()).norm() == 0.0);
  CHECK(cfg.fiber_is_momentum);
  CHECK(cfg.integrator == IntegratorChoice::LiePoisson);
  CHECK(cfg.orientation == FlowOrientation::Forward);
  CHECK(cfg.solver == SolverKind::FixedPoint);
  CHECK(cfg.output_format == "csv");
}

TEST_CASE("parse_run_config full field set") {
  std::string text = R"({
    "group": "SO3",
    "tau": "cayley",
    "theta": 0.5,
    "step": 5e-3,
    "steps": 7,
    "inertia": [[2.0, 0.1, 0.0], [0.1, 3.0, 0.0], [0.0, 0.0, 4.0]],
    "initial_rotation": [0.0, 0.0, 2.0, 1.5707963267948966],
    "initial_velocity": [0.1, 0.2, 0.3],
    "integrator": "euler_poincare",
    "orientation": "paper",
    "solver": "newton",
    "solver_tolerance": 1e-11,
    "max_iterations": 33,
    "output": "out.csv",
    "output_format": "csv"
  })";
  RunConfig cfg = parse_run_config(text);
  CHECK(cfg.tau == TauKind::Cayley);
  CHECK(cfg.theta == 0.5);
  CHECK(cfg.step_count == 7);
  CHECK(cfg.inertia(0, 1) == 0.1);
  CHECK((cfg.initial_rotation - testutil::rz(1.5707963267948966)).norm() < 1e-15);
  CHECK_FALSE(cfg.fiber_is_momentum);
  CHECK(cfg.integrator == IntegratorChoice::EulerPoincare);
  CHECK(cfg.orientation == FlowOrientation::Paper);
  CHECK(cfg.solver == SolverKind::Newton);
  CHECK(cfg.solver_tol == 1e-11);
  CHECK(cfg.max_iterations == 33);
  CHECK(cfg.output_path == "out.csv");

  IntegratorConfig icfg = integrator_config(cfg);
  CHECK(icfg.step == 5e-3);
  CHECK(icfg.solver == SolverKind::Newton);
  CHECK(icfg.orientation == FlowOrientation::Paper);
  CHECK(icfg.max_iterations == 33);
}

TEST_CASE("parse_run_config rejections") {
  auto reject = [](const std::string& text, const char* needle) {
    try {
      parse_run_config(text);
      FAIL_CHECK("expected ConfigError mentioning " << needle);
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  reject(with_fields("\"tau_kind\": \"exp\""), "unknown config field 'tau_kind'");
  reject(without_field("step"), "'step' is required");
  reject(without_field("inertia"), "'inertia'");
  reject(without_field("initial_momentum"), "initial_momentum");
  reject(with_fields("\"initial_velocity\": [1,0,0]"), "exactly one");
  reject(with_fields("\"theta\": 1.5"), "'theta'");
  reject(with_fields("\"theta\": -0.25"), "'theta'");
  reject(with_fields("\"step\": 0.0"), "'step'");
  reject(with_fields("\"step\": -1e-2"), "'step'");
  reject(with_fields("\"steps\": 0"), "'steps'");
  reject(with_fields("\"inertia\": [1.0, 2.0]"), "'inertia'");
  reject(with_fields("\"inertia\": [1.0, -2.0, 3.0]"), "'inertia'");
  reject(with_fields("\"group\": \"se3\""), "'group'");
  reject(with_fields("\"tau\": \"pade\""), "'tau'");
  reject(with_fields("\"integrator\": \"rk4\""), "'integrator'");
  reject(with_fields("\"orientation\": \"backward\""), "'orientation'");
  reject(with_fields("\"solver\": \"broyden\""), "'solver'");
  reject(with_fields("\"output_format\": \"parquet\""), "'output_format'");
  reject(with_fields("\"initial_rotation\": [0, 0, 0, 0.5]"), "zero axis");
  reject(with_fields("\"initial_rotation\": [0, 0, 1]"), "'initial_rotation'");
  reject("{", "not valid JSON");

  // Zero axis with zero angle is the identity, as is the string form.
  RunConfig cfg = parse_run_config(with_fields("\"initial_rotation\": [0, 0, 0, 0.0]"));
  CHECK((cfg.initial_rotation - Eigen::Matrix3d::Identity()).norm() == 0.0);
  RunConfig named = parse_run_config(with_fields("\"initial_rotation\": \"identity\""));
  CHECK((named.initial_rotation - Eigen::Matrix3d::Identity()).norm() == 0.0);
}

TEST_CASE("initial momentum and velocity agree through the inertia tensor") {
  RunConfig cfg = parse_run_config(kCanonicalJson);
  Eigen::Vector3d mu = initial_momentum(cfg);
  Eigen::Vector3d xi = initial_velocity(cfg);
  CHECK((cfg.inertia * xi - mu).norm() < 1e-14);
  CHECK((mu - cfg.initial_fiber).norm() == 0.0);

  RunConfig vel = parse_run_config(R"({
    "step": 1e-2, "steps": 10, "inertia": [1.0, 2.0, 3.0],
    "initial_velocity": [0.5, 0.5, 0.5]
  })");
  CHECK((initial_velocity(vel) - Eigen::Vector3d(0.5, 0.5, 0.5)).norm() == 0.0);
  CHECK((initial_momentum(vel) - Eigen::Vector3d(0.5, 1.0, 1.5)).norm() < 1e-15);
}

TEST_CASE("load_run_config") {
  TempDir tmp;
  std::string path = tmp.file("run.json");
  {
    std::ofstream out(path);
    out << kCanonicalJson;
  }
  RunConfig cfg = load_run_config(path);
  CHECK(cfg.step_count == 100);
  CHECK_THROWS_AS(load_run_config(tmp.file("missing.json")), ConfigError);
}

TEST_CASE("write_trajectory_csv") {
  std::vector<TrajectoryRecord> records(2);
  records[0].k = 0;
  records[0].time = 0.0;
  records[1].k = 1;
  records[1].time = 0.1 + 0.2;  // 0.30000000000000004
  records[1].m = Eigen::Vector3d(1.0 / 3.0, -2.0, 5e-17);
  records[1].energy = 0.125;

  std::ostringstream out;
  write_trajectory_csv(out, records);
  std::istringstream in(out.str());
  std::string header, row0, row1;
  std::getline(in, header);
  std::getline(in, row0);
  std::getline(in, row1);
  CHECK(header == kTrajectoryCsvHeader);
  CHECK(header ==
        "k,time,g00,g01,g02,g10,g11,g12,g20,g21,g22,m1,m2,m3,energy,casimir,orth_residual");
  CHECK(row0.substr(0, 4) == "0,0,");

  // 17 significant digits round-trip.
  auto field = [](const std::string& row, int idx) {
    std::istringstream s(row);
    std::string cell;
    for (int i = 0; i <= idx; ++i) std::getline(s, cell, ',');
    return cell;
  };
  CHECK(std::strtod(field(row1, 1).c_str(), nullptr) == 0.1 + 0.2);
  CHECK(std::strtod(field(row1, 11).c_str(), nullptr) == 1.0 / 3.0);
  CHECK(std::strtod(field(row1, 13).c_str(), nullptr) == 5e-17);

  // Deterministic output: identical bytes on a second write.
  std::ostringstream again;
  write_trajectory_csv(again, records);
  CHECK(out.str() == again.str());
}

TEST_CASE("run_simulation") {
  RunConfig cfg = parse_run_config(kCanonicalJson);
  std::vector<TrajectoryRecord> records = run_simulation(cfg);
  REQUIRE(records.size() == 101);
  CHECK(records[0].k == 0);
  CHECK(records[0].time == 0.0);
  CHECK((records[0].g - Eigen::Matrix3d::Identity()).norm() == 0.0);
  CHECK(records[0].casimir == doctest::Approx(1.0).epsilon(1e-14));

  for (std::size_t i = 1; i < records.size(); ++i) {
    CHECK(records[i].time > records[i - 1].time);
    CHECK(std::abs(records[i].casimir - records[0].casimir) <= 1e-13);
    CHECK(records[i].orth_residual <= 1e-12);
  }
  CHECK(records.back().time == doctest::Approx(1.0).epsilon(1e-12));

  // m column semantics: velocity for euler_poincare, momentum otherwise.
  RunConfig ep = cfg;
  ep.integrator = IntegratorChoice::EulerPoincare;
  ep.fiber_is_momentum = false;
  ep.initial_fiber = initial_velocity(cfg);
  std::vector<TrajectoryRecord> ep_records = run_simulation(ep);
  CHECK((ep_records[0].m - ep.initial_fiber).norm() == 0.0);
  CHECK(ep_records[0].energy == doctest::Approx(records[0].energy).epsilon(1e-13));
  CHECK(ep_records[0].casimir == doctest::Approx(records[0].casimir).epsilon(1e-13));

  RunConfig ref = cfg;
  ref.integrator = IntegratorChoice::Reference;
  ref.step_count = 5;
  std::vector<TrajectoryRecord> ref_records = run_simulation(ref);
  CHECK(ref_records.size() == 6);
  CHECK(std::abs(ref_records.back().casimir - 1.0) <= 1e-10);

  // Both momentum integrators track the reference over a short horizon.
  RunConfig lp_short = cfg;
  lp_short.step_count = 5;
  std::vector<TrajectoryRecord> lp_records = run_simulation(lp_short);
  CHECK((lp_records.back().m - ref_records.back().m).norm() < 1e-3);
}

TEST_CASE("simulate writes the trajectory") {
  TempDir tmp;
  RunConfig cfg = parse_run_config(kCanonicalJson);
  cfg.step_count = 3;
  cfg.output_path = tmp.file("traj.csv");
  simulate(cfg);

  std::ifstream in(cfg.output_path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == kTrajectoryCsvHeader);
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 4);

  cfg.output_path = tmp.file("no_such_dir/traj.csv");
  CHECK_THROWS_AS(simulate(cfg), ConfigError);
}

TEST_CASE("order_study validation") {
  RunConfig cfg = parse_run_config(kCanonicalJson);
  CHECK_THROWS_AS(order_study(cfg, {1e-2, 5e-3}), std::invalid_argument);
  CHECK_THROWS_AS(order_study(cfg, {1e-2, 5e-3, 3e-3}), std::invalid_argument);
  CHECK_THROWS_AS(order_study(cfg, {1e-2, 5e-3, 2.5e-3}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(order_study(cfg, {-1e-2, -5e-3, -2.5e-3}), std::invalid_argument);
}

TEST_CASE("order_study canonical run") {
  RunConfig cfg = parse_run_config(kCanonicalJson);
  OrderStudyResult result = order_study(cfg, {1e-2, 5e-3, 2.5e-3}, 1.0);
  REQUIRE(result.rows.size() == 3);
  CHECK(result.rows[0].step_count == 100);
  CHECK(result.rows[2].step_count == 400);
  CHECK(result.monotone);
  CHECK_FALSE(result.exact);
  CHECK(result.slope >= 0.8);
  CHECK(result.slope <= 2.2);

  std::string report = format_order_report(result);
  CHECK(report.find("step=0.01 ") != std::string::npos);
  CHECK(report.find("monotone=yes") != std::string::npos);
  CHECK(report.find("slope=") != std::string::npos);
}

TEST_CASE("order_study exact regimes") {
  // Principal axis: the scheme reproduces the flow to roundoff.
  RunConfig axis = parse_run_config(R"({
    "step": 1e-2, "steps": 1, "inertia": [1.0, 2.0, 3.0],
    "initial_momentum": [1.0, 0.0, 0.0]
  })");
  OrderStudyResult result = order_study(axis, {1e-2, 5e-3, 2.5e-3}, 0.5);
  CHECK(result.exact);
  for (const OrderStudyRow& row : result.rows) CHECK(row.error <= 1e-9);
  CHECK(format_order_report(result).find("slope=exact") != std::string::npos);

  // The reference integrator against its own oracle.
  RunConfig ref = parse_run_config(kCanonicalJson);
  ref.integrator = IntegratorChoice::Reference;
  OrderStudyResult self = order_study(ref, {1e-2, 5e-3, 2.5e-3}, 0.25);
  CHECK(self.exact);
}

TEST_CASE("check suites") {
  std::vector<std::string> names = check_suite_names();
  REQUIRE(names.size() == 6);
  CHECK(names.front() == "algebra");

  std::vector<CheckResult> results = run_check_suite("tulczyjew", 42);
  CHECK(results.size() >= 5);
  for (const CheckResult& r : results) {
    CHECK(r.suite == "tulczyjew");
    CHECK(r.passed);
    CHECK(r.worst <= r.tolerance);
  }

  // Deterministic for a fixed seed.
  std::vector<CheckResult> again = run_check_suite("tulczyjew", 42);
  REQUIRE(again.size() == results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(again[i].name == results[i].name);
    CHECK(again[i].worst == results[i].worst);
  }

  CHECK_THROWS_AS(run_check_suite("nonsense", 42), std::invalid_argument);
}

TEST_CASE("default_check_seed") {
  unsetenv("GEOMINT_SEED");
  std::uint64_t base = default_check_seed();
  CHECK(base == default_check_seed());

  setenv("GEOMINT_SEED", "12345", 1);
  CHECK(default_check_seed() == 12345);

  setenv("GEOMINT_SEED", "12x45", 1);
  CHECK_THROWS_AS(default_check_seed(), ConfigError);

  unsetenv("GEOMINT_SEED");
  CHECK(default_check_seed() == base);
}

#include "geomint/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "geomint/errors.hpp"

namespace geomint {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError("config field '" + field + "' must be a number");
  return j.get<double>();
}

long require_integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) {
    throw ConfigError("config field '" + field + "' must be an integer");
  }
  return j.get<long>();
}

std::string require_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError("config field '" + field + "' must be a string");
  return j.get<std::string>();
}

Eigen::Vector3d require_vec3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) {
    throw ConfigError("config field '" + field + "' must be an array of 3 numbers");
  }
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) v(i) = require_number(j[i], field);
  return v;
}

Eigen::Matrix3d parse_inertia(const json& j) {
  if (j.is_array() && j.size() == 3 && j[0].is_number()) {
    Eigen::Vector3d d = require_vec3(j, "inertia");
    return d.asDiagonal();
  }
  if (j.is_array() && j.size() == 3 && j[0].is_array()) {
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) m.row(r) = require_vec3(j[r], "inertia").transpose();
    return m;
  }
  throw ConfigError("config field 'inertia' must be 3 numbers (diagonal) or a 3x3 array");
}

Eigen::Matrix3d parse_rotation(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return Eigen::Matrix3d::Identity();
    throw ConfigError("config field 'initial_rotation' string value must be \"identity\"");
  }
  if (j.is_array() && j.size() == 4) {
    Eigen::Vector3d axis;
    for (int i = 0; i < 3; ++i) axis(i) = require_number(j[i], "initial_rotation");
    double angle = require_number(j[3], "initial_rotation");
    if (axis.norm() == 0.0) {
      if (angle != 0.0) throw ConfigError("config field 'initial_rotation' has a zero axis");
      return Eigen::Matrix3d::Identity();
    }
    return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
  }
  throw ConfigError("config field 'initial_rotation' must be \"identity\" or [ax, ay, az, angle]");
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  static const std::set<std::string> known = {
      "group",        "tau",        "theta",          "step",
      "steps",        "inertia",    "initial_rotation", "initial_momentum",
      "initial_velocity", "integrator", "orientation",  "solver",
      "solver_tolerance", "max_iterations", "output",   "output_format"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      throw ConfigError("unknown config field '" + item.key() + "'");
    }
  }

  RunConfig cfg;

  if (j.contains("group") && require_string(j["group"], "group") != "SO3") {
    throw ConfigError("config field 'group' must be \"SO3\"");
  }

  if (j.contains("tau")) {
    std::string tau = require_string(j["tau"], "tau");
    if (tau == "exp") {
      cfg.tau = TauKind::Exponential;
    } else if (tau == "cayley") {
      cfg.tau = TauKind::Cayley;
    } else {
      throw ConfigError("config field 'tau' must be \"exp\" or \"cayley\"");
    }
  }

  if (j.contains("theta")) {
    cfg.theta = require_number(j["theta"], "theta");
    if (!(cfg.theta >= 0.0 && cfg.theta <= 1.0)) {
      throw ConfigError("config field 'theta' must lie in [0, 1]");
    }
  }

  if (!j.contains("step")) throw ConfigError("config field 'step' is required");
  cfg.step = require_number(j["step"], "step");
  if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) {
    throw ConfigError("config field 'step' must be positive and finite");
  }

  if (!j.contains("steps")) throw ConfigError("config field 'steps' is required");
  cfg.step_count = require_integer(j["steps"], "steps");
  if (cfg.step_count < 1) throw ConfigError("config field 'steps' must be at least 1");

  if (!j.contains("inertia")) throw ConfigError("config field 'inertia' is required");
  cfg.inertia = parse_inertia(j["inertia"]);

  if (j.contains("initial_rotation")) cfg.initial_rotation = parse_rotation(j["initial_rotation"]);

  bool has_mu = j.contains("initial_momentum");
  bool has_xi = j.contains("initial_velocity");
  if (has_mu == has_xi) {
    throw ConfigError("config must set exactly one of 'initial_momentum'/'initial_velocity'");
  }
  cfg.fiber_is_momentum = has_mu;
  cfg.initial_fiber = require_vec3(j[has_mu ? "initial_momentum" : "initial_velocity"],
                                   has_mu ? "initial_momentum" : "initial_velocity");

  if (j.contains("integrator")) {
    std::string which = require_string(j["integrator"], "integrator");
    if (which == "lie_poisson") {
      cfg.integrator = IntegratorChoice::LiePoisson;
    } else if (which == "euler_poincare") {
      cfg.integrator = IntegratorChoice::EulerPoincare;
    } else if (which == "reference") {
      cfg.integrator = IntegratorChoice::Reference;
    } else {
      throw ConfigError(
          "config field 'integrator' must be \"lie_poisson\", \"euler_poincare\" or "
          "\"reference\"");
    }
  }

  if (j.contains("orientation")) {
    std::string o = require_string(j["orientation"], "orientation");
    if (o == "forward") {
      cfg.orientation = FlowOrientation::Forward;
    } else if (o == "paper") {
      cfg.orientation = FlowOrientation::Paper;
    } else {
      throw ConfigError("config field 'orientation' must be \"forward\" or \"paper\"");
    }
  }

  if (j.contains("solver")) {
    std::string s = require_string(j["solver"], "solver");
    if (s == "fixed_point") {
      cfg.solver = SolverKind::FixedPoint;
    } else if (s == "newton") {
      cfg.solver = SolverKind::Newton;
    } else {
      throw ConfigError("config field 'solver' must be \"fixed_point\" or \"newton\"");
    }
  }

  if (j.contains("solver_tolerance")) {
    cfg.solver_tol = require_number(j["solver_tolerance"], "solver_tolerance");
    if (!(cfg.solver_tol > 0.0)) {
      throw ConfigError("config field 'solver_tolerance' must be positive");
    }
  }

  if (j.contains("max_iterations")) {
    cfg.max_iterations = static_cast<int>(require_integer(j["max_iterations"], "max_iterations"));
    if (cfg.max_iterations < 1) {
      throw ConfigError("config field 'max_iterations' must be at least 1");
    }
  }

  if (j.contains("output")) cfg.output_path = require_string(j["output"], "output");
  if (j.contains("output_format")) {
    cfg.output_format = require_string(j["output_format"], "output_format");
    if (cfg.output_format != "csv") {
      throw ConfigError("config field 'output_format' must be \"csv\"");
    }
  }

  // Fail on a bad inertia tensor while we can still name the field.
  try {
    InertiaOperator check{Eigen::MatrixXd(cfg.inertia)};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config field 'inertia' is invalid: ") + e.what());
  }

  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

IntegratorConfig integrator_config(const RunConfig& cfg) {
  IntegratorConfig out;
  out.step = cfg.step;
  out.solver_tol = cfg.solver_tol;
  out.max_iterations = cfg.max_iterations;
  out.solver = cfg.solver;
  out.orientation = cfg.orientation;
  return out;
}

Eigen::Vector3d initial_momentum(const RunConfig& cfg) {
  if (cfg.fiber_is_momentum) return cfg.initial_fiber;
  return cfg.inertia * cfg.initial_fiber;
}

Eigen::Vector3d initial_velocity(const RunConfig& cfg) {
  if (!cfg.fiber_is_momentum) return cfg.initial_fiber;
  return cfg.inertia.ldlt().solve(cfg.initial_fiber);
}

}  // namespace geomint

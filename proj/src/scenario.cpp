#include "projqm/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>

#include "projqm/bloch.hpp"

namespace projqm {

namespace {

std::complex<double> parse_complex_entry(const Json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
    throw ConfigError(field, "complex entries must be [re, im] number pairs");
  return {node[0].get<double>(), node[1].get<double>()};
}

double require_number(const Json& node, const std::string& field) {
  if (!node.is_number()) throw ConfigError(field, "must be a number");
  return node.get<double>();
}

RealVectord parse_times(const Json& node) {
  RealVectord times;
  if (node.is_array()) {
    if (node.empty()) throw ConfigError("times", "time grid must be nonempty");
    times.resize(static_cast<Eigen::Index>(node.size()));
    Eigen::Index i = 0;
    for (const auto& entry : node) times[i++] = require_number(entry, "times");
  } else if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      if (key != "start" && key != "stop" && key != "step")
        throw ConfigError("times." + key, "unknown field");
    if (!node.contains("start") || !node.contains("stop") || !node.contains("step"))
      throw ConfigError("times", "grid object needs start, stop and step");
    const double start = require_number(node["start"], "times.start");
    const double stop = require_number(node["stop"], "times.stop");
    const double step = require_number(node["step"], "times.step");
    if (!(step > 0)) throw ConfigError("times.step", "must be positive");
    if (stop < start) throw ConfigError("times.stop", "must not precede start");
    const auto count = static_cast<Eigen::Index>(std::floor((stop - start) / step + 1e-9)) + 1;
    times.resize(count);
    for (Eigen::Index i = 0; i < count; ++i) times[i] = start + static_cast<double>(i) * step;
  } else {
    throw ConfigError("times", "must be an array of numbers or a start/stop/step object");
  }
  for (Eigen::Index i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw ConfigError("times", "values must be strictly ascending");
  return times;
}

void require_hermitian(const ComplexMatrixd& m, const std::string& field) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kNormTolerance)
    throw ConfigError(field, "matrix is not Hermitian within tolerance");
}

std::vector<std::pair<std::string, HermitianOperatord>> wrap_observables(
    const ScenarioConfig& config) {
  std::vector<std::pair<std::string, HermitianOperatord>> out;
  out.reserve(config.observables.size());
  for (const auto& [name, matrix] : config.observables)
    out.emplace_back(name, HermitianOperatord(matrix));
  return out;
}

}  // namespace

StateVectord parse_complex_vector(const Json& node, const std::string& field) {
  if (!node.is_array() || node.empty())
    throw ConfigError(field, "must be a nonempty array of [re, im] pairs");
  StateVectord v(static_cast<Eigen::Index>(node.size()));
  Eigen::Index i = 0;
  for (const auto& entry : node) v[i++] = parse_complex_entry(entry, field);
  return v;
}

ComplexMatrixd parse_complex_matrix(const Json& node, Eigen::Index dim,
                                    const std::string& field) {
  if (!node.is_array() || static_cast<Eigen::Index>(node.size()) != dim * dim)
    throw ConfigError(field, "expected a row-major array of " + std::to_string(dim * dim) +
                                 " [re, im] pairs");
  ComplexMatrixd m(dim, dim);
  Eigen::Index i = 0;
  for (const auto& entry : node) {
    m(i / dim, i % dim) = parse_complex_entry(entry, field);
    ++i;
  }
  return m;
}

Json complex_vector_json(const StateVectord& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(Json::array({v[i].real(), v[i].imag()}));
  return out;
}

Json complex_matrix_json(const ComplexMatrixd& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
  return out;
}

ScenarioConfig parse_scenario(const Json& doc, Eigen::Index max_dim) {
  if (!doc.is_object()) throw ConfigError("config", "must be a JSON object");
  static const std::set<std::string> known = {
      "dim", "hbar", "hamiltonian", "initial_state", "times", "observables", "output_path"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw ConfigError(key, "unknown field");

  ScenarioConfig config;

  if (!doc.contains("dim")) throw ConfigError("dim", "required field is missing");
  if (!doc["dim"].is_number_integer()) throw ConfigError("dim", "must be an integer");
  config.dim = doc["dim"].get<Eigen::Index>();
  if (config.dim < 2) throw ConfigError("dim", "must be at least 2");
  if (config.dim > max_dim)
    throw ConfigError("dim", "exceeds the supported maximum of " + std::to_string(max_dim));

  if (doc.contains("hbar")) {
    config.hbar = require_number(doc["hbar"], "hbar");
    if (!(config.hbar > 0)) throw ConfigError("hbar", "must be positive");
  }

  if (!doc.contains("hamiltonian")) throw ConfigError("hamiltonian", "required field is missing");
  config.hamiltonian = parse_complex_matrix(doc["hamiltonian"], config.dim, "hamiltonian");
  require_hermitian(config.hamiltonian, "hamiltonian");

  if (!doc.contains("initial_state")) throw ConfigError("initial_state", "required field is missing");
  config.initial_state = parse_complex_vector(doc["initial_state"], "initial_state");
  if (config.initial_state.size() != config.dim)
    throw ConfigError("initial_state", "expected " + std::to_string(config.dim) + " amplitudes");
  if (!(config.initial_state.cwiseAbs().maxCoeff() > kZeroTolerance))
    throw ConfigError("initial_state", "must not be the zero vector");

  if (!doc.contains("times")) throw ConfigError("times", "required field is missing");
  config.times = parse_times(doc["times"]);

  if (doc.contains("observables")) {
    if (!doc["observables"].is_object())
      throw ConfigError("observables", "must be an object of named matrices");
    for (const auto& [name, value] : doc["observables"].items()) {
      if (name.empty() || name.find_first_of(",\r\n") != std::string::npos)
        throw ConfigError("observables",
                          "observable names must be nonempty and free of commas and newlines");
      ComplexMatrixd m = parse_complex_matrix(value, config.dim, "observables." + name);
      require_hermitian(m, "observables." + name);
      config.observables.emplace_back(name, std::move(m));
    }
  }

  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string()) throw ConfigError("output_path", "must be a string");
    config.output_path = doc["output_path"].get<std::string>();
  }

  return config;
}

ScenarioConfig load_scenario(const std::string& path, Eigen::Index max_dim) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open file: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return parse_scenario(doc, max_dim);
}

StateVectord perturb_state(const StateVectord& state, double epsilon) {
  if (epsilon == 0.0) return state;
  const Eigen::Index n = state.size();
  StateVectord shifted(n);
  for (Eigen::Index i = 0; i < n; ++i) shifted[i] = state[(i + 1) % n];
  StateVectord corrupted = state + epsilon * shifted;
  const double nrm = corrupted.norm();
  if (!(nrm > kZeroTolerance)) throw Error("perturbation cancelled the state");
  return corrupted / nrm;
}

Trajectoryd run_scenario(const ScenarioConfig& config, double perturbation) {
  const HamiltonianSystemd sys(HermitianOperatord(config.hamiltonian), config.hbar);
  const auto observables = wrap_observables(config);
  Trajectoryd trajectory = sample_trajectory(sys, config.initial_state, config.times, observables);
  if (perturbation != 0.0) {
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
      trajectory.states[i] = perturb_state(trajectory.states[i], perturbation);
      trajectory.points[i] = ProjectivePointd(trajectory.states[i]);
      for (std::size_t j = 0; j < observables.size(); ++j)
        trajectory.expectations[j].second[static_cast<Eigen::Index>(i)] =
            expectation(observables[j].second, trajectory.states[i]);
    }
  }
  return trajectory;
}

double PictureCheckReport::max_deviation() const {
  double worst = 0.0;
  for (const auto& entry : entries)
    worst = std::max({worst, entry.picture_deviation, entry.flow_residual});
  return worst;
}

PictureCheckReport picture_check(const ScenarioConfig& config, double perturbation,
                                 double fd_step) {
  const HamiltonianSystemd sys(HermitianOperatord(config.hamiltonian), config.hbar);
  const auto observables = wrap_observables(config);
  const StateVectord v0 = config.initial_state / config.initial_state.norm();

  PictureCheckReport report;
  for (const auto& [name, op] : observables) {
    const HermitianOperatord rhs_op = heisenberg_rhs(op, sys);
    double picture_max = 0.0;
    double flow_max = 0.0;
    for (Eigen::Index i = 0; i < config.times.size(); ++i) {
      const double t = config.times[i];
      // the corruption hook touches the Schrödinger side only
      const StateVectord psi_t = perturb_state(evolve_state(sys, v0, t), perturbation);
      const double schrodinger = expectation(op, psi_t);
      const double heisenberg = expectation(evolve_operator_heisenberg(sys, op, t), v0);
      picture_max = std::max(picture_max, std::abs(schrodinger - heisenberg));

      double flow;
      if (perturbation == 0.0) {
        flow = poisson_flow_residual(sys, op, v0, t, fd_step);
      } else {
        const double ahead =
            expectation(op, perturb_state(evolve_state(sys, v0, t + fd_step), perturbation));
        const double behind =
            expectation(op, perturb_state(evolve_state(sys, v0, t - fd_step), perturbation));
        flow = std::abs((ahead - behind) / (2 * fd_step) - expectation(rhs_op, psi_t));
      }
      flow_max = std::max(flow_max, flow);
    }
    report.entries.push_back({name, picture_max, flow_max});
  }
  return report;
}

std::string format_real(double value, int significant_digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
  return buffer;
}

void write_trajectory_csv(std::ostream& out, const Trajectoryd& trajectory) {
  const Eigen::Index dim = trajectory.states.empty() ? 0 : trajectory.states.front().size();
  out << "t";
  for (Eigen::Index i = 0; i < dim; ++i) out << ",re(a" << i << "),im(a" << i << ")";
  for (const auto& [name, series] : trajectory.expectations) out << "," << name;
  out << "\n";
  for (Eigen::Index row = 0; row < trajectory.times.size(); ++row) {
    out << format_real(trajectory.times[row]);
    const StateVectord& state = trajectory.states[static_cast<std::size_t>(row)];
    for (Eigen::Index i = 0; i < dim; ++i)
      out << "," << format_real(state[i].real()) << "," << format_real(state[i].imag());
    for (const auto& [name, series] : trajectory.expectations)
      out << "," << format_real(series[row]);
    out << "\n";
  }
}

void write_bloch_csv(std::ostream& out, const Trajectoryd& trajectory) {
  out << "t,x,y,z\n";
  for (Eigen::Index row = 0; row < trajectory.times.size(); ++row) {
    const BlochVectord b = bloch_vector(trajectory.points[static_cast<std::size_t>(row)]);
    out << format_real(trajectory.times[row]) << "," << format_real(b.x()) << ","
        << format_real(b.y()) << "," << format_real(b.z()) << "\n";
  }
}

Json trajectory_json(const Trajectoryd& trajectory) {
  Json out;
  out["times"] = Json::array();
  for (Eigen::Index i = 0; i < trajectory.times.size(); ++i)
    out["times"].push_back(trajectory.times[i]);
  out["states"] = Json::array();
  for (const auto& state : trajectory.states) out["states"].push_back(complex_vector_json(state));
  out["points"] = Json::array();
  for (const auto& point : trajectory.points)
    out["points"].push_back(complex_vector_json(point.canonical()));
  out["expectations"] = Json::object();
  for (const auto& [name, series] : trajectory.expectations) {
    Json list = Json::array();
    for (Eigen::Index i = 0; i < series.size(); ++i) list.push_back(series[i]);
    out["expectations"][name] = std::move(list);
  }
  return out;
}

Json bloch_json(const Trajectoryd& trajectory) {
  Json out;
  out["times"] = Json::array();
  for (Eigen::Index i = 0; i < trajectory.times.size(); ++i)
    out["times"].push_back(trajectory.times[i]);
  out["bloch"] = Json::array();
  for (const auto& point : trajectory.points) {
    const BlochVectord b = bloch_vector(point);
    out["bloch"].push_back(Json::array({b.x(), b.y(), b.z()}));
  }
  return out;
}

}  // namespace projqm

// scenario.hpp - config-driven experiment layer: JSON scenario ingestion with
// field-level validation, trajectory runs, picture-equivalence reports, and
// CSV/JSON export.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dynamics.hpp"

namespace projqm {

using Json = nlohmann::ordered_json;

inline constexpr Eigen::Index kMaxScenarioDim = 32;

/// Raised on malformed scenario input; the message starts with the offending
/// field's name.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct ScenarioConfig {
  Eigen::Index dim = 0;
  double hbar = 1.0;
  ComplexMatrixd hamiltonian;
  StateVectord initial_state;
  RealVectord times;
  std::vector<std::pair<std::string, ComplexMatrixd>> observables;
  std::string output_path;  // empty means standard output
};

/// Complex scalars serialize as [re, im]; vectors as arrays of pairs;
/// matrices as row-major arrays of dim² pairs.
StateVectord parse_complex_vector(const Json& node, const std::string& field);
ComplexMatrixd parse_complex_matrix(const Json& node, Eigen::Index dim,
                                    const std::string& field);
Json complex_vector_json(const StateVectord& v);
Json complex_matrix_json(const ComplexMatrixd& m);

ScenarioConfig parse_scenario(const Json& doc, Eigen::Index max_dim = kMaxScenarioDim);
ScenarioConfig load_scenario(const std::string& path, Eigen::Index max_dim = kMaxScenarioDim);

/// The state corruption behind the --perturb test hook: mix in a cyclic shift
/// of the amplitudes and renormalize.
StateVectord perturb_state(const StateVectord& state, double epsilon);

Trajectoryd run_scenario(const ScenarioConfig& config, double perturbation = 0.0);

struct PictureCheckEntry {
  std::string name;
  double picture_deviation;  // max |⟨L⟩ψ(t) - ⟨L_H(t)⟩ψ(0)| over the grid
  double flow_residual;      // max poisson_flow_residual over the grid
};

struct PictureCheckReport {
  std::vector<PictureCheckEntry> entries;
  double max_deviation() const;
};

PictureCheckReport picture_check(const ScenarioConfig& config, double perturbation = 0.0,
                                 double fd_step = 1e-5);

/// 17 significant digits, '.' decimal separator, Unix newlines.
std::string format_real(double value, int significant_digits = 17);

void write_trajectory_csv(std::ostream& out, const Trajectoryd& trajectory);
void write_bloch_csv(std::ostream& out, const Trajectoryd& trajectory);
Json trajectory_json(const Trajectoryd& trajectory);
Json bloch_json(const Trajectoryd& trajectory);

}  // namespace projqm

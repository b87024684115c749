// projqm command line: scenario evolution, picture-equivalence checks, and
// chart/Bloch/decomposition utilities over the projective state library.
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "projqm/projqm.hpp"
#include "projqm/scenario.hpp"

namespace {

using namespace projqm;

double parse_real_token(std::string text, const std::string& field) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw ConfigError(field, "empty number");
  text = text.substr(first, last - first + 1);
  std::size_t consumed = 0;
  double value = 0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw ConfigError(field, "cannot parse number '" + text + "'");
  }
  if (consumed != text.size())
    throw ConfigError(field, "cannot parse number '" + text + "'");
  return value;
}

// Accepts "re", "re,im", "(re,im)" and "[re,im]".
std::complex<double> parse_complex_token(std::string text, const std::string& field) {
  if (text.size() >= 2 &&
      ((text.front() == '(' && text.back() == ')') ||
       (text.front() == '[' && text.back() == ']')))
    text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real_token(text, field), 0.0};
  return {parse_real_token(text.substr(0, comma), field),
          parse_real_token(text.substr(comma + 1), field)};
}

StateVectord parse_amplitudes(const std::vector<std::string>& tokens, const std::string& field) {
  if (tokens.size() < 2) throw ConfigError(field, "need at least two amplitudes");
  StateVectord v(static_cast<Eigen::Index>(tokens.size()));
  for (std::size_t i = 0; i < tokens.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = parse_complex_token(tokens[i], field);
  if (!(v.cwiseAbs().maxCoeff() > kZeroTolerance))
    throw ConfigError(field, "must not be the zero vector");
  return v;
}

std::string format_complex(const std::complex<double>& z, int digits = 17) {
  if (z.imag() == 0.0) return format_real(z.real(), digits);
  return format_real(z.real(), digits) + (z.imag() < 0 ? "-" : "+") +
         format_real(std::abs(z.imag()), digits) + "i";
}

std::string format_coords(const StateVectord& coords) {
  std::string line = "(";
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (i) line += ", ";
    line += format_complex(coords[i]);
  }
  return line + ")";
}

struct GlobalFlags {
  bool json = false;
  double tol = 1e-8;
  double perturb = 0.0;
  std::optional<double> hbar;
};

void apply_hbar_override(ScenarioConfig& config, const GlobalFlags& flags) {
  if (!flags.hbar) return;
  if (!(*flags.hbar > 0)) throw ConfigError("hbar", "must be positive");
  config.hbar = *flags.hbar;
}

int cmd_evolve(const std::string& config_path, bool bloch_out, const GlobalFlags& flags) {
  ScenarioConfig config = load_scenario(config_path);
  apply_hbar_override(config, flags);
  if (bloch_out && config.dim != 2)
    throw ConfigError("dim", "--bloch output needs a dim 2 scenario");
  const Trajectoryd trajectory = run_scenario(config, flags.perturb);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!config.output_path.empty()) {
    file.open(config.output_path);
    if (!file) throw ConfigError("output_path", "cannot open for writing: " + config.output_path);
    out = &file;
  }
  if (flags.json)
    *out << (bloch_out ? bloch_json(trajectory) : trajectory_json(trajectory)).dump(2) << "\n";
  else if (bloch_out)
    write_bloch_csv(*out, trajectory);
  else
    write_trajectory_csv(*out, trajectory);
  return 0;
}

int cmd_picture_check(const std::string& config_path, const GlobalFlags& flags) {
  ScenarioConfig config = load_scenario(config_path);
  apply_hbar_override(config, flags);
  if (config.observables.empty())
    throw ConfigError("observables", "picture-check needs at least one observable");
  if (!(flags.tol > 0)) throw ConfigError("tol", "must be positive");

  const PictureCheckReport report = picture_check(config, flags.perturb);
  const bool pass = report.max_deviation() < flags.tol;
  if (flags.json) {
    Json out;
    out["tolerance"] = flags.tol;
    out["observables"] = Json::array();
    for (const auto& entry : report.entries)
      out["observables"].push_back({{"name", entry.name},
                                    {"picture_max", entry.picture_deviation},
                                    {"flow_max", entry.flow_residual}});
    out["max_deviation"] = report.max_deviation();
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& entry : report.entries)
      std::cout << entry.name << ": picture max = " << format_real(entry.picture_deviation)
                << ", flow max = " << format_real(entry.flow_residual) << "\n";
    std::cout << "max deviation = " << format_real(report.max_deviation())
              << " (tolerance " << format_real(flags.tol) << ")\n"
              << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_bloch(const std::vector<std::string>& tokens, const GlobalFlags& flags) {
  const StateVectord v = parse_amplitudes(tokens, "state");
  if (v.size() != 2) throw ConfigError("state", "need exactly two amplitudes");
  const BlochVectord b = bloch_vector(ProjectivePointd(v));
  if (flags.json) {
    Json out{{"x", b.x()}, {"y", b.y()}, {"z", b.z()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_real(b.x(), 12) << " " << format_real(b.y(), 12) << " "
              << format_real(b.z(), 12) << "\n";
  }
  return 0;
}

int cmd_chart(const std::vector<std::string>& tokens, Eigen::Index k, Eigen::Index j,
              const GlobalFlags& flags) {
  const ProjectivePointd p(parse_amplitudes(tokens, "state"));
  ChartCoordinatesd in_k = [&] {
    try {
      return to_chart(p, k);
    } catch (const Error& e) {
      throw ConfigError("k", e.what());
    }
  }();
  ChartCoordinatesd in_j = [&] {
    try {
      return chart_transition(in_k, j);
    } catch (const Error& e) {
      throw ConfigError("j", e.what());
    }
  }();
  if (flags.json) {
    Json out{{"chart", in_k.chart_index()},
             {"coords", complex_vector_json(in_k.coords())},
             {"transition_chart", in_j.chart_index()},
             {"transition_coords", complex_vector_json(in_j.coords())}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_coords(in_k.coords()) << "\n" << format_coords(in_j.coords()) << "\n";
  }
  return 0;
}

Json read_json_input(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ConfigError("matrix", "cannot open file: " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("matrix", std::string("invalid JSON: ") + e.what());
  }
}

int cmd_decompose(const std::string& path, const GlobalFlags& flags) {
  Json doc = read_json_input(path);
  if (doc.is_object()) {
    if (!doc.contains("matrix")) throw ConfigError("matrix", "required field is missing");
    doc = doc["matrix"];
  }
  if (!doc.is_array()) throw ConfigError("matrix", "expected an array of [re, im] pairs");
  const auto count = static_cast<Eigen::Index>(doc.size());
  const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(count))));
  if (dim < 2 || dim * dim != count)
    throw ConfigError("matrix", "entry count must be a perfect square of a dimension >= 2");
  if (dim > kMaxScenarioDim)
    throw ConfigError("matrix", "dimension exceeds the supported maximum of " +
                                    std::to_string(kMaxScenarioDim));
  const ComplexMatrixd m = parse_complex_matrix(doc, dim, "matrix");

  const HermitianOperatord a = [&] {
    try {
      return HermitianOperatord(m);
    } catch (const NotHermitian& e) {
      throw ConfigError("matrix", e.what());
    }
  }();
  const GeneratorBasisd basis(dim);
  const RealVectord coeffs = traceless_decompose(a, basis);
  const double residual = (a.matrix() - reconstruct(basis, coeffs)).cwiseAbs().maxCoeff();

  if (flags.json) {
    Json out;
    out["dim"] = dim;
    out["coefficients"] = Json::array();
    out["labels"] = Json::array();
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
      out["coefficients"].push_back(coeffs[i]);
      out["labels"].push_back(basis.label(i));
    }
    out["residual"] = residual;
    std::cout << out.dump(2) << "\n";
  } else {
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
      std::cout << "c[" << i << "] " << basis.label(i) << " = " << format_real(coeffs[i]) << "\n";
    std::cout << "residual = " << format_real(residual) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional quantum states as points of complex projective space"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "emit JSON instead of CSV/plain text");
  double hbar_value = 0.0;
  auto* hbar_opt = app.add_option("--hbar", hbar_value, "override the action scale of the scenario");
  app.add_option("--tol", flags.tol, "pass threshold for picture-check (default 1e-8)");
  app.add_option("--perturb", flags.perturb,
                 "corrupt evolved states by this amount (test hook)");

  auto* evolve = app.add_subcommand("evolve", "run a scenario and export the trajectory");
  evolve->fallthrough();
  std::string evolve_config;
  evolve->add_option("config", evolve_config, "scenario JSON file")->required();
  bool evolve_bloch = false;
  evolve->add_flag("--bloch", evolve_bloch, "export the Bloch trajectory (dim 2 only)");

  auto* picture = app.add_subcommand("picture-check",
                                     "compare both evolution pictures along the scenario");
  picture->fallthrough();
  std::string picture_config;
  picture->add_option("config", picture_config, "scenario JSON file")->required();

  auto* bloch = app.add_subcommand("bloch", "sphere image of a dim 2 state");
  bloch->fallthrough();
  std::vector<std::string> bloch_tokens;
  bloch->add_option("amplitudes", bloch_tokens, "two amplitudes, each 're' or 're,im'")
      ->required()
      ->expected(-2);

  auto* chart = app.add_subcommand("chart", "local coordinates and a chart transition");
  chart->fallthrough();
  Eigen::Index chart_k = 0;
  Eigen::Index chart_j = 0;
  chart->add_option("-k,--from", chart_k, "source chart pivot index (default 0)");
  chart->add_option("-j,--to", chart_j, "target chart pivot index (default 0)");
  std::vector<std::string> chart_tokens;
  chart->add_option("amplitudes", chart_tokens, "homogeneous amplitudes")
      ->required()
      ->expected(-2);

  auto* decompose = app.add_subcommand("decompose",
                                       "generator-basis coefficients of a Hermitian matrix");
  decompose->fallthrough();
  std::string decompose_path;
  decompose
      ->add_option("matrix", decompose_path, "JSON file of row-major [re, im] pairs, or - for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (hbar_opt->count() > 0) flags.hbar = hbar_value;

  try {
    if (app.got_subcommand(evolve)) return cmd_evolve(evolve_config, evolve_bloch, flags);
    if (app.got_subcommand(picture)) return cmd_picture_check(picture_config, flags);
    if (app.got_subcommand(bloch)) return cmd_bloch(bloch_tokens, flags);
    if (app.got_subcommand(chart)) return cmd_chart(chart_tokens, chart_k, chart_j, flags);
    if (app.got_subcommand(decompose)) return cmd_decompose(decompose_path, flags);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

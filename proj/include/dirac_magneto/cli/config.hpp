// JSON scenario configuration for the dirac-magneto command line.
#pragma once

#include "dirac_magneto/comparators.hpp"
#include "dirac_magneto/field_observables.hpp"
#include "dirac_magneto/grid_quadrature.hpp"
#include "dirac_magneto/magnetic_effects.hpp"

#include <json.hpp>

#include <array>
#include <complex>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace dmag::cli {

/// Invalid configuration; `path` names the offending field (e.g. "state.mass").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& reason)
      : std::runtime_error(path + ": " + reason), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct StateConfig {
  double k3 = 0.0;
  double mass = 1.0;
  std::complex<double> lambda_plus{1.0, 0.0};
  std::complex<double> lambda_minus{0.0, 0.0};
  std::optional<double> norm_volume;  // defaults to d^3
};

struct ScenarioSection {
  double B3 = 1.0;
  double d = 1.0;
  double e_abs = 1.0;
  double m_e = 1.0;
  double g_s = 2.0;
};

struct PotentialConfig {
  std::string variant = "uniform";  // uniform | symmetric_gauge | landau_gauge
  std::array<double, 3> center{0.0, 0.0, 0.0};
};

struct GridConfig {
  std::array<int, 3> samples_per_axis{9, 9, 9};
  QuadratureKind rule = QuadratureKind::simpson;
  int refinement_levels = 2;
};

struct OutputConfig {
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> path;
};

struct ScenarioConfig {
  StateConfig state;
  ScenarioSection scenario;
  PotentialConfig potential;
  GridConfig grid;
  OutputConfig outputs;
};

/// Throws ConfigError on unknown keys, wrong types or unknown enum values.
ScenarioConfig parse_config(const nlohmann::json& doc);

/// Reads and parses a config file. Unreadable files raise IoError, malformed
/// JSON raises ConfigError.
ScenarioConfig load_config(const std::filesystem::path& path);

/// Checks every downstream invariant; throws ConfigError naming the field.
void validate(const ScenarioConfig& config);

OutputFormat parse_format(const std::string& name);

// Library objects built from a validated config.
PlaneWaveState<double> make_state(const ScenarioConfig& config);
MagneticScenario<double> make_scenario(const ScenarioConfig& config);
QuadratureRule make_rule(const ScenarioConfig& config);
BoxRegion<double> normalization_region(const ScenarioConfig& config);
/// Cube [0, d]^3 where the applied potential is non-vanishing.
BoxRegion<double> interaction_region(const ScenarioConfig& config);
/// "uniform" is the support average of the symmetric gauge about `center`.
VectorPotential<double> make_potential(const ScenarioConfig& config);
double effective_norm_volume(const ScenarioConfig& config);

}  // namespace dmag::cli

// The four dirac-magneto subcommands as pure functions of a config.
#pragma once

#include "dirac_magneto/cli/config.hpp"
#include "dirac_magneto/cli/report.hpp"

#include <span>
#include <string>
#include <vector>

namespace dmag::cli {

enum class SweepAxis { B3, d, lambda, resolution };

SweepAxis parse_axis(const std::string& name);
std::string_view axis_name(SweepAxis axis);

/// Energy, spin vector, norm and energy-term breakdown of the configured state.
Report cmd_observables(const ScenarioConfig& config);

/// Closed-form and quadrature magnetic variations plus measured coefficients.
Report cmd_magnetic(const ScenarioConfig& config);

/// Field-theory, Zeeman and Larmor predictions side by side. The classical
/// moment uses M = m_e and r = d.
Report cmd_compare(const ScenarioConfig& config);

/// One config per sweep value, all validated before returning. For the
/// lambda axis values are angles theta in degrees with l+ = cos(theta),
/// l- = sin(theta); resolution values are samples per axis.
std::vector<ScenarioConfig> sweep_configs(const ScenarioConfig& base, SweepAxis axis, std::span<const double> values);

SweepTable cmd_sweep(const ScenarioConfig& base, SweepAxis axis, std::span<const double> values);

}  // namespace dmag::cli

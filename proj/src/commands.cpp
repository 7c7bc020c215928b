#include "dirac_magneto/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dmag::cli {

namespace {

struct MagneticNumbers {
  double ci;
  double dS3_closed;
  double dH_closed;
  IntegralResult<Vector3<double>, double> dS;
  IntegralResult<double, double> dH_nrl;
  IntegralResult<double, double> dH_exact;
};

MagneticNumbers compute_magnetic(const ScenarioConfig& c) {
  const auto state = make_state(c);
  const auto scen = make_scenario(c);
  const auto pot = make_potential(c);
  const auto region = pot.support;
  const auto rule = make_rule(c);
  const auto& a = state.amplitudes();
  return {chirality_index(a),
          expect_delta_S3_closed(scen, a),
          expect_delta_H_closed(scen, a, state.energy()),
          delta_S(state, pot, region, rule, scen.e_abs),
          delta_H_nrl(state, pot, region, rule, scen.e_abs),
          delta_H_exact(state, pot, region, rule, scen.e_abs)};
}

void ensure_finite(const Report& r) {
  for (const auto& row : r.rows) {
    if (!std::isfinite(row.value) || !std::isfinite(row.error_estimate)) {
      throw ConsistencyError("non-finite result for " + row.quantity, 0.0);
    }
  }
}

// Ratios are only reported where the denominator is non-zero.
void add_ratio(Report& r, const std::string& name, double num, double den, double err, Method m) {
  if (den != 0.0) r.rows.push_back({name, num / den, m, std::abs(err / den)});
}

}  // namespace

SweepAxis parse_axis(const std::string& name) {
  if (name == "B3") return SweepAxis::B3;
  if (name == "d") return SweepAxis::d;
  if (name == "lambda") return SweepAxis::lambda;
  if (name == "resolution") return SweepAxis::resolution;
  throw ConfigError("sweep.axis", "must be B3, d, lambda or resolution (got \"" + name + "\")");
}

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::B3:
      return "B3";
    case SweepAxis::d:
      return "d";
    case SweepAxis::lambda:
      return "lambda";
    case SweepAxis::resolution:
      return "resolution";
  }
  return "B3";
}

Report cmd_observables(const ScenarioConfig& c) {
  validate(c);
  const auto state = make_state(c);
  const auto rep = observable_report(state, normalization_region(c), make_rule(c));
  Report r{"observables", {}};
  r.rows = {
      {"energy", rep.total_energy, Method::quadrature, rep.energy_error},
      {"energy_dispersion", state.energy(), Method::closed_form, 0.0},
      {"energy_mass_term", rep.energy_terms.mass, Method::quadrature, rep.energy_error},
      {"energy_upper_term", rep.energy_terms.upper, Method::quadrature, rep.energy_error},
      {"energy_lower_term", rep.energy_terms.lower, Method::quadrature, rep.energy_error},
      {"spin_x", rep.spin_vector(0), Method::quadrature, rep.spin_error},
      {"spin_y", rep.spin_vector(1), Method::quadrature, rep.spin_error},
      {"spin_z", rep.spin_vector(2), Method::quadrature, rep.spin_error},
      {"spin_z_closed", (std::norm(c.state.lambda_plus) - std::norm(c.state.lambda_minus)) / 2, Method::closed_form,
       0.0},
      {"norm", rep.norm_check, Method::quadrature, rep.norm_error},
  };
  ensure_finite(r);
  return r;
}

Report cmd_magnetic(const ScenarioConfig& c) {
  validate(c);
  const auto n = compute_magnetic(c);
  const auto state = make_state(c);
  const double m = c.scenario.m_e;
  Report r{"magnetic", {}};
  r.rows = {
      {"ci", n.ci, Method::closed_form, 0.0},
      {"dS3_closed", n.dS3_closed, Method::closed_form, 0.0},
      {"dH_closed", n.dH_closed, Method::closed_form, 0.0},
      {"dS_quad_x", n.dS.value(0), Method::quadrature, n.dS.error_estimate},
      {"dS_quad_y", n.dS.value(1), Method::quadrature, n.dS.error_estimate},
      {"dS_quad_z", n.dS.value(2), Method::quadrature, n.dS.error_estimate},
      {"dH_nrl_quad", n.dH_nrl.value, Method::quadrature, n.dH_nrl.error_estimate},
      {"dH_exact_quad", n.dH_exact.value, Method::quadrature, n.dH_exact.error_estimate},
      {"dH_nrl_minus_exact", n.dH_nrl.value - n.dH_exact.value, Method::quadrature,
       n.dH_nrl.error_estimate + n.dH_exact.error_estimate},
  };
  if (n.dS3_closed != 0.0) {
    add_ratio(r, "dH_over_dS3_closed", n.dH_closed, n.dS3_closed, 0.0, Method::closed_form);
    r.rows.push_back({"two_m2_over_E0", 2 * m * m / state.energy(), Method::closed_form, 0.0});
  }
  add_ratio(r, "coeff_dS3_quad_over_closed", n.dS.value(2), n.dS3_closed, n.dS.error_estimate, Method::quadrature);
  add_ratio(r, "coeff_dH_nrl_quad_over_closed", n.dH_nrl.value, n.dH_closed, n.dH_nrl.error_estimate,
            Method::quadrature);
  add_ratio(r, "coeff_dH_exact_quad_over_closed", n.dH_exact.value, n.dH_closed, n.dH_exact.error_estimate,
            Method::quadrature);
  ensure_finite(r);
  return r;
}

Report cmd_compare(const ScenarioConfig& c) {
  validate(c);
  const auto state = make_state(c);
  const auto scen = make_scenario(c);
  const auto& a = state.amplitudes();
  const double mu = bohr_magneton(scen.e_abs, scen.m_e);
  const double omega = larmor_frequency(scen.g_s, mu, scen.B3);
  const double qft = expect_delta_S3_closed(scen, a);
  const double larmor = larmor_form_delta_S3(omega, scen.d, a);
  const auto spin = spin_vector(state, normalization_region(c), make_rule(c));
  const Vector3<double> B(0.0, 0.0, scen.B3);
  const ClassicalMomentSpec<double> moment{scen.m_e, scen.d};

  Report r{"compare", {}};
  r.rows = {
      {"bohr_magneton", mu, Method::closed_form, 0.0},
      {"omega_L", omega, Method::larmor, 0.0},
      {"ci", chirality_index(a), Method::closed_form, 0.0},
      {"dS3_qft", qft, Method::closed_form, 0.0},
      {"dS3_larmor_form", larmor, Method::larmor, 0.0},
      {"identity_abs_diff", std::abs(qft - larmor), Method::closed_form, 0.0},
      {"spin_z", spin.value(2), Method::quadrature, spin.error_estimate},
      {"zeeman_state", zeeman_shift(B, spin.value, scen.g_s, mu), Method::zeeman,
       std::abs(scen.g_s * mu * scen.B3) * spin.error_estimate},
      {"zeeman_spin_up", zeeman_shift(B, Vector3<double>(0, 0, 0.5), scen.g_s, mu), Method::zeeman, 0.0},
      {"zeeman_spin_down", zeeman_shift(B, Vector3<double>(0, 0, -0.5), scen.g_s, mu), Method::zeeman, 0.0},
      {"larmor_velocity", circular_velocity(moment.r, omega), Method::larmor, 0.0},
      {"larmor_Lz", classical_Lz(moment, omega), Method::larmor, 0.0},
  };
  ensure_finite(r);
  return r;
}

std::vector<ScenarioConfig> sweep_configs(const ScenarioConfig& base, SweepAxis axis, std::span<const double> values) {
  if (values.size() < 2) throw ConfigError("sweep.values", "at least 2 sweep values are required");
  validate(base);
  std::vector<ScenarioConfig> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string path = "sweep.values[" + std::to_string(i) + "]";
    const double v = values[i];
    if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
    ScenarioConfig c = base;
    switch (axis) {
      case SweepAxis::B3:
        c.scenario.B3 = v;
        break;
      case SweepAxis::d:
        c.scenario.d = v;
        break;
      case SweepAxis::lambda: {
        const double theta = v * std::numbers::pi / 180.0;
        c.state.lambda_plus = std::cos(theta);
        c.state.lambda_minus = std::sin(theta);
        break;
      }
      case SweepAxis::resolution:
        if (v != std::floor(v) || v > 1e6) throw ConfigError(path, "resolution values must be integers");
        c.grid.samples_per_axis.fill(static_cast<int>(v));
        break;
    }
    try {
      validate(c);
    } catch (const ConfigError& e) {
      throw ConfigError(path, e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

SweepTable cmd_sweep(const ScenarioConfig& base, SweepAxis axis, std::span<const double> values) {
  const auto configs = sweep_configs(base, axis, values);
  SweepTable table{std::string(axis_name(axis)), {}};
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto n = compute_magnetic(configs[i]);
    const double err = std::max({n.dS.error_estimate, n.dH_nrl.error_estimate, n.dH_exact.error_estimate});
    const SweepRow row{values[i], n.ci, n.dS3_closed, n.dH_closed, n.dS.value(2), n.dH_nrl.value, n.dH_exact.value, err};
    for (double x : {row.ci, row.dS3_closed, row.dH_closed, row.dS3_quad, row.dH_nrl_quad, row.dH_exact_quad, row.err_estimate}) {
      if (!std::isfinite(x)) throw ConsistencyError("non-finite sweep result", 0.0);
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace dmag::cli

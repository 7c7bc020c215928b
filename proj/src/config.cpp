#include "dirac_magneto/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace dmag::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError(path.empty() ? key : path + "." + key, "unknown key");
  }
}

const json* section(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) return nullptr;
  if (!it->is_object()) throw ConfigError(name, "must be an object");
  return &*it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "must be a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "must be an integer");
  return v.get<int>();
}

std::complex<double> complex_pair(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw ConfigError(path, "must be [re, im]");
  return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
}

template <typename T>
void read(const json& obj, const std::string& path, const char* key, T& out) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  const std::string p = path + "." + key;
  if constexpr (std::is_same_v<T, double>) {
    out = number(*it, p);
  } else if constexpr (std::is_same_v<T, int>) {
    out = integer(*it, p);
  } else if constexpr (std::is_same_v<T, std::complex<double>>) {
    out = complex_pair(*it, p);
  }
}

void require(bool ok, const std::string& path, const std::string& reason) {
  if (!ok) throw ConfigError(path, reason);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("outputs.format", "must be \"csv\" or \"json\" (got \"" + name + "\")");
}

ScenarioConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "config must be a JSON object");
  reject_unknown(doc, "", {"state", "scenario", "potential", "grid", "outputs"});
  ScenarioConfig c;

  if (const json* s = section(doc, "state")) {
    reject_unknown(*s, "state", {"k3", "mass", "lambda_plus", "lambda_minus", "norm_volume"});
    read(*s, "state", "k3", c.state.k3);
    read(*s, "state", "mass", c.state.mass);
    read(*s, "state", "lambda_plus", c.state.lambda_plus);
    read(*s, "state", "lambda_minus", c.state.lambda_minus);
    if (s->contains("norm_volume")) c.state.norm_volume = number(s->at("norm_volume"), "state.norm_volume");
  }

  if (const json* s = section(doc, "scenario")) {
    reject_unknown(*s, "scenario", {"B3", "d", "e_abs", "m_e", "g_s"});
    read(*s, "scenario", "B3", c.scenario.B3);
    read(*s, "scenario", "d", c.scenario.d);
    read(*s, "scenario", "e_abs", c.scenario.e_abs);
    read(*s, "scenario", "m_e", c.scenario.m_e);
    read(*s, "scenario", "g_s", c.scenario.g_s);
  }

  if (const json* s = section(doc, "potential")) {
    reject_unknown(*s, "potential", {"variant", "center"});
    if (s->contains("variant")) {
      const json& v = s->at("variant");
      require(v.is_string(), "potential.variant", "must be a string");
      c.potential.variant = v.get<std::string>();
    }
    if (s->contains("center")) {
      const json& v = s->at("center");
      require(v.is_array() && v.size() == 3, "potential.center", "must be [x, y, z]");
      for (std::size_t i = 0; i < 3; ++i) c.potential.center[i] = number(v[i], "potential.center[" + std::to_string(i) + "]");
    }
  }

  if (const json* s = section(doc, "grid")) {
    reject_unknown(*s, "grid", {"samples_per_axis", "rule", "refinement_levels"});
    if (s->contains("samples_per_axis")) {
      const json& v = s->at("samples_per_axis");
      if (v.is_array()) {
        require(v.size() == 3, "grid.samples_per_axis", "must be an integer or [nx, ny, nz]");
        for (std::size_t i = 0; i < 3; ++i) {
          c.grid.samples_per_axis[i] = integer(v[i], "grid.samples_per_axis[" + std::to_string(i) + "]");
        }
      } else {
        const int n = integer(v, "grid.samples_per_axis");
        c.grid.samples_per_axis = {n, n, n};
      }
    }
    if (s->contains("rule")) {
      const json& v = s->at("rule");
      require(v.is_string(), "grid.rule", "must be a string");
      const auto name = v.get<std::string>();
      if (name == "simpson") {
        c.grid.rule = QuadratureKind::simpson;
      } else if (name == "midpoint") {
        c.grid.rule = QuadratureKind::midpoint;
      } else {
        throw ConfigError("grid.rule", "must be \"simpson\" or \"midpoint\" (got \"" + name + "\")");
      }
    }
    read(*s, "grid", "refinement_levels", c.grid.refinement_levels);
  }

  if (const json* s = section(doc, "outputs")) {
    reject_unknown(*s, "outputs", {"format", "path"});
    if (s->contains("format")) {
      const json& v = s->at("format");
      require(v.is_string(), "outputs.format", "must be a string");
      c.outputs.format = parse_format(v.get<std::string>());
    }
    if (s->contains("path")) {
      const json& v = s->at("path");
      require(v.is_string(), "outputs.path", "must be a string");
      c.outputs.path = v.get<std::string>();
    }
  }
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

void validate(const ScenarioConfig& c) {
  const auto& st = c.state;
  require(finite(st.k3), "state.k3", "must be finite");
  require(finite(st.mass) && st.mass > 0, "state.mass", "must be positive");
  if (st.norm_volume) require(finite(*st.norm_volume) && *st.norm_volume > 0, "state.norm_volume", "must be positive");
  for (const auto& [name, v] : {std::pair{"state.lambda_plus", st.lambda_plus}, std::pair{"state.lambda_minus", st.lambda_minus}}) {
    require(finite(v.real()) && finite(v.imag()), name, "must be finite");
  }
  const double p = std::norm(st.lambda_plus) + std::norm(st.lambda_minus);
  if (std::abs(p - 1.0) > SpinAmplitudes<double>::completeness_tolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "|lambda_plus|^2 + |lambda_minus|^2 = " << p << ", must equal 1 within 1e-12";
    throw ConfigError("state.lambda_plus", msg.str());
  }

  const auto& sc = c.scenario;
  require(finite(sc.B3), "scenario.B3", "must be finite");
  require(finite(sc.d) && sc.d > 0, "scenario.d", "must be positive");
  require(finite(sc.e_abs) && sc.e_abs > 0, "scenario.e_abs", "must be positive");
  require(finite(sc.m_e) && sc.m_e > 0, "scenario.m_e", "must be positive");
  require(finite(sc.g_s), "scenario.g_s", "must be finite");

  const double E0 = std::sqrt(st.k3 * st.k3 + st.mass * st.mass);
  require(E0 >= sc.m_e, "state.mass", "state energy sqrt(k3^2 + mass^2) must be at least scenario.m_e");

  const auto& pot = c.potential;
  require(pot.variant == "uniform" || pot.variant == "symmetric_gauge" || pot.variant == "landau_gauge",
          "potential.variant", "must be uniform, symmetric_gauge or landau_gauge (got \"" + pot.variant + "\")");
  for (double x : pot.center) require(finite(x), "potential.center", "must be finite");

  require(c.grid.refinement_levels >= 1, "grid.refinement_levels", "must be >= 1");
  try {
    level_grids(normalization_region(c), make_rule(c));
    level_grids(interaction_region(c), make_rule(c));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("grid.samples_per_axis", e.what());
  }
}

double effective_norm_volume(const ScenarioConfig& c) {
  return c.state.norm_volume.value_or(c.scenario.d * c.scenario.d * c.scenario.d);
}

PlaneWaveState<double> make_state(const ScenarioConfig& c) {
  return PlaneWaveState<double>::along_z(c.state.k3, c.state.mass,
                                         SpinAmplitudes<double>::make(c.state.lambda_plus, c.state.lambda_minus),
                                         effective_norm_volume(c));
}

MagneticScenario<double> make_scenario(const ScenarioConfig& c) {
  const auto& s = c.scenario;
  MagneticScenario<double> m{s.B3, s.d, s.e_abs, s.m_e, s.g_s};
  m.validate();
  return m;
}

QuadratureRule make_rule(const ScenarioConfig& c) { return {c.grid.rule, c.grid.refinement_levels}; }

BoxRegion<double> normalization_region(const ScenarioConfig& c) {
  const double side = std::cbrt(effective_norm_volume(c));
  return BoxRegion<double>{Vector3<double>::Zero(), Vector3<double>::Constant(side), c.grid.samples_per_axis};
}

BoxRegion<double> interaction_region(const ScenarioConfig& c) {
  return BoxRegion<double>{Vector3<double>::Zero(), Vector3<double>::Constant(c.scenario.d), c.grid.samples_per_axis};
}

VectorPotential<double> make_potential(const ScenarioConfig& c) {
  const Vector3<double> center(c.potential.center[0], c.potential.center[1], c.potential.center[2]);
  const BoxRegion<double> support = interaction_region(c);
  const double B3 = c.scenario.B3;
  if (c.potential.variant == "symmetric_gauge") return {SymmetricGauge<double>{B3, center}, support};
  if (c.potential.variant == "landau_gauge") return {LandauGauge<double>{B3, center(0)}, support};
  return averaged_uniform(VectorPotential<double>{SymmetricGauge<double>{B3, center}, support});
}

}  // namespace dmag::cli

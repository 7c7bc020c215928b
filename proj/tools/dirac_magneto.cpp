// dirac-magneto: magnetic effects on free Dirac electrons.
//
//   dirac-magneto observables|magnetic|compare|sweep --config <path>
//                 [--format csv|json] [--out <path>]
//   dirac-magneto sweep ... --axis B3|d|lambda|resolution --values v1,v2,...
//
// Exit codes: 0 success, 2 invalid config or arguments, 3 numerical
// consistency failure, 4 I/O failure.

#include "dirac_magneto/cli/commands.hpp"
#include "dirac_magneto/cli/config.hpp"
#include "dirac_magneto/cli/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode : int { kOk = 0, kConfig = 2, kNumerical = 3, kIo = 4 };

struct Options {
  std::string config_path;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::string axis;
  std::vector<double> values;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "Scenario config (JSON)")->required();
  cmd->add_option("--format", o.format, "Output format: csv or json");
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
}

std::string run(const std::string& command, const Options& o, dmag::cli::ScenarioConfig& config) {
  using namespace dmag::cli;
  if (o.format) config.outputs.format = parse_format(*o.format);
  if (o.out) config.outputs.path = *o.out;
  const bool json = config.outputs.format == OutputFormat::json;
  if (command == "sweep") {
    const auto axis = parse_axis(o.axis);
    const auto table = cmd_sweep(config, axis, o.values);
    return json ? to_json(table) : to_csv(table);
  }
  Report report;
  if (command == "observables") {
    report = cmd_observables(config);
  } else if (command == "magnetic") {
    report = cmd_magnetic(config);
  } else {
    report = cmd_compare(config);
  }
  return json ? to_json(report) : to_csv(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnetic effects on free Dirac electrons: closed forms, quadratures and Zeeman/Larmor comparisons"};
  app.require_subcommand(1, 1);
  Options o;
  for (const char* name : {"observables", "magnetic", "compare"}) add_common(app.add_subcommand(name), o);
  auto* sweep = app.add_subcommand("sweep", "Tabulate magnetic quantities over one parameter");
  add_common(sweep, o);
  sweep->add_option("--axis", o.axis, "B3, d, lambda (degrees) or resolution")->required();
  sweep->add_option("--values", o.values, "Comma-separated sweep values")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::string text;
  dmag::cli::ScenarioConfig config;
  try {
    config = dmag::cli::load_config(o.config_path);
    text = run(command, o, config);
  } catch (const dmag::cli::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const dmag::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const dmag::ConsistencyError& e) {
    std::cerr << "numerical consistency failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const dmag::IntegrationError& e) {
    std::cerr << "numerical consistency failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }

  if (!config.outputs.path) {
    std::cout << text;
    return std::cout.good() ? kOk : kIo;
  }
  std::ofstream out(*config.outputs.path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << *config.outputs.path << "\n";
    return kIo;
  }
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << *config.outputs.path << "\n";
    return kIo;
  }
  return kOk;
}

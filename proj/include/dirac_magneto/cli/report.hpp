// Report rows and their CSV / JSON encodings.
#pragma once

#include "dirac_magneto/cli/config.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dmag::cli {

enum class Method { closed_form, quadrature, zeeman, larmor };

std::string_view method_name(Method m);

struct ReportRow {
  std::string quantity;
  double value;
  Method method;
  double error_estimate;
};

struct Report {
  std::string command;
  std::vector<ReportRow> rows;

  /// First row with the given quantity name; throws std::out_of_range if absent.
  const ReportRow& row(std::string_view quantity) const;
  bool has(std::string_view quantity) const;
};

struct SweepRow {
  double sweep_value;
  double ci;
  double dS3_closed;
  double dH_closed;
  double dS3_quad;
  double dH_nrl_quad;
  double dH_exact_quad;
  double err_estimate;
};

struct SweepTable {
  std::string axis;
  std::vector<SweepRow> rows;
};

/// Fixed CSV column order of a sweep.
inline constexpr std::array<std::string_view, 8> kSweepColumns{
    "sweep_value", "ci", "dS3_closed", "dH_closed", "dS3_quad", "dH_nrl_quad", "dH_exact_quad", "err_estimate"};

/// Shortest decimal string that parses back to exactly `x`.
std::string format_number(double x);

std::string to_csv(const Report& report);
std::string to_json(const Report& report);
std::string to_csv(const SweepTable& table);
std::string to_json(const SweepTable& table);

}  // namespace dmag::cli

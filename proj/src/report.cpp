#include "dirac_magneto/cli/report.hpp"

#include <charconv>
#include <stdexcept>

namespace dmag::cli {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed_form";
    case Method::quadrature:
      return "quadrature";
    case Method::zeeman:
      return "zeeman";
    case Method::larmor:
      return "larmor";
  }
  return "closed_form";
}

const ReportRow& Report::row(std::string_view quantity) const {
  for (const auto& r : rows) {
    if (r.quantity == quantity) return r;
  }
  throw std::out_of_range("report has no row " + std::string(quantity));
}

bool Report::has(std::string_view quantity) const {
  for (const auto& r : rows) {
    if (r.quantity == quantity) return true;
  }
  return false;
}

std::string format_number(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

namespace {

using ordered = nlohmann::ordered_json;

// nlohmann's serializer emits round-trip doubles, so both encodings parse back
// to the same binary value.
ordered number(double x) { return ordered(x); }

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_csv(const Report& report) {
  std::string out = "quantity,value,method,error_estimate\n";
  for (const auto& r : report.rows) {
    out += r.quantity;
    out += ',';
    out += format_number(r.value);
    out += ',';
    out += method_name(r.method);
    out += ',';
    out += format_number(r.error_estimate);
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& report) {
  ordered j;
  j["command"] = report.command;
  j["rows"] = ordered::array();
  for (const auto& r : report.rows) {
    ordered row;
    row["quantity"] = r.quantity;
    row["value"] = number(r.value);
    row["method"] = std::string(method_name(r.method));
    row["error_estimate"] = number(r.error_estimate);
    j["rows"].push_back(std::move(row));
  }
  return dump(j);
}

namespace {

std::array<double, 8> columns(const SweepRow& r) {
  return {r.sweep_value, r.ci, r.dS3_closed, r.dH_closed, r.dS3_quad, r.dH_nrl_quad, r.dH_exact_quad, r.err_estimate};
}

}  // namespace

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t i = 0; i < kSweepColumns.size(); ++i) {
    if (i) out += ',';
    out += kSweepColumns[i];
  }
  out += '\n';
  for (const auto& r : table.rows) {
    const auto v = columns(r);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += format_number(v[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  ordered j;
  j["command"] = "sweep";
  j["axis"] = table.axis;
  j["rows"] = ordered::array();
  for (const auto& r : table.rows) {
    const auto v = columns(r);
    ordered row;
    for (std::size_t i = 0; i < v.size(); ++i) row[std::string(kSweepColumns[i])] = number(v[i]);
    j["rows"].push_back(std::move(row));
  }
  return dump(j);
}

}  // namespace dmag::cli

#include "fracalg/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fracalg {

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "' (valid: csv, json)");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  // to_chars ignores the C locale, so the separator is always '.'.
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::optional<double> empirical_order(double r_prev, double r, double ratio) {
  if (!(r_prev > 0.0) || !(r > 0.0) || !std::isfinite(r_prev) || !std::isfinite(r)) return std::nullopt;
  return std::log(r_prev / r) / std::log(ratio);
}

void fill_empirical_orders(std::vector<ReportRow>& rows, double ratio) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].residual && rows[i].residual) {
      rows[i].empirical_order = empirical_order(*rows[i - 1].residual, *rows[i].residual, ratio);
    }
  }
}

namespace {

std::string value_text(const ReportValue& v) {
  struct {
    std::string operator()(double d) const { return format_number(d); }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
  } visitor;
  return std::visit(visitor, v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_number(double d) { return std::isfinite(d) ? format_number(d) : "null"; }

std::string json_value(const ReportValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return json_number(*d);
  if (const auto* s = std::get_if<std::string>(&v)) return json_string(*s);
  return value_text(v);
}

std::string json_object(const KeyValues& kv) {
  std::string out = "{";
  for (std::size_t i = 0; i < kv.size(); ++i) {
    if (i) out += ",";
    out += json_string(kv[i].first) + ":" + json_value(kv[i].second);
  }
  return out + "}";
}

std::string emit_csv(const Report& r) {
  std::string out = "command,n,h,residual,empirical_order,extra\n";
  for (const auto& row : r.rows) {
    std::string extra;
    for (std::size_t i = 0; i < row.extra.size(); ++i) {
      if (i) extra += ';';
      extra += row.extra[i].first + "=" + value_text(row.extra[i].second);
    }
    out += csv_field(r.command) + "," + std::to_string(row.n) + "," + format_number(row.h) + "," +
           (row.residual ? format_number(*row.residual) : "") + "," +
           (row.empirical_order ? format_number(*row.empirical_order) : "") + "," +
           csv_field(extra) + "\n";
  }
  return out;
}

std::string emit_json(const Report& r) {
  std::string out = "{";
  out += "\"schema_version\":" + json_string(r.schema_version);
  out += ",\"command\":" + json_string(r.command);
  out += ",\"config\":" + json_object(r.config);
  out += std::string(",\"passed\":") + (r.passed ? "true" : "false");
  out += ",\"rows\":[";
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    if (i) out += ",";
    out += "{\"n\":" + std::to_string(row.n);
    out += ",\"h\":" + json_number(row.h);
    out += ",\"residual\":" + (row.residual ? json_number(*row.residual) : "null");
    out += ",\"empirical_order\":" + (row.empirical_order ? json_number(*row.empirical_order) : "null");
    out += ",\"extra\":" + json_object(row.extra) + "}";
  }
  out += "]}\n";
  return out;
}

}  // namespace

std::string emit(const Report& report, OutputFormat format) {
  return format == OutputFormat::csv ? emit_csv(report) : emit_json(report);
}

}  // namespace fracalg

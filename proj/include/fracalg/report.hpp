#pragma once

// Machine-readable study reports. Numbers are written with 17 significant
// digits and '.' as decimal separator; output never depends on timing, so
// the same study yields the same bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fracalg {

using ReportValue = std::variant<double, std::int64_t, bool, std::string>;
using KeyValues = std::vector<std::pair<std::string, ReportValue>>;

struct ReportRow {
  std::size_t n = 0;
  double h = 0.0;
  std::optional<double> residual;
  std::optional<double> empirical_order;
  KeyValues extra;
};

struct Report {
  std::string schema_version = "1";
  std::string command;
  KeyValues config;
  std::vector<ReportRow> rows;
  bool passed = true;
  /// Kept out of the emitted bytes; see emit().
  double wall_time_ms = 0.0;
};

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view text);

/// %.17g, with "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double v);

/// CSV: header `command,n,h,residual,empirical_order,extra`, LF endings,
/// extra as `key=value` pairs joined by ';'. JSON: keys in fixed order,
/// missing or non-finite numbers as null.
std::string emit(const Report& report, OutputFormat format);

/// log(r_prev / r) / log(ratio); empty when either residual is not positive.
std::optional<double> empirical_order(double r_prev, double r, double ratio = 2.0);

/// Fills empirical_order for rows 1.. from consecutive residuals.
void fill_empirical_orders(std::vector<ReportRow>& rows, double ratio = 2.0);

}  // namespace fracalg

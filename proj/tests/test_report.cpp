#include <clocale>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "fracalg/report.hpp"
#include "json.hpp"

using namespace fracalg;
using nlohmann::json;

namespace {

Report one_row() {
  Report r;
  r.command = "integrate";
  r.config = {{"a", 0.0}, {"n", std::int64_t{64}}, {"probe", std::string("cos")}, {"exact", true}};
  ReportRow row;
  row.n = 64;
  row.h = 1.0 / 64;
  row.residual = 0.1 + 0.2;
  row.empirical_order = std::nextafter(1.5, 2.0);
  row.extra = {{"t", 1.0 / 3.0}, {"k", std::int64_t{-7}}, {"ok", false}, {"name", std::string("ramp(0.25)")}};
  r.rows.push_back(row);
  r.wall_time_ms = 12.5;
  return r;
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(INFINITY) == "inf");
  CHECK(format_number(-INFINITY) == "-inf");
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, 5e-324, std::numeric_limits<double>::max()}) {
    CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    CHECK(format_number(v) == buf);
  }
}

TEST_CASE("format_number ignores the C locale") {
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
    CHECK(format_number(0.5) == "0.5");
    std::setlocale(LC_NUMERIC, "C");
  }
}

TEST_CASE("parse_output_format") {
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}

TEST_CASE("empty rows give a header-only CSV") {
  Report r;
  r.command = "integrate";
  CHECK(emit(r, OutputFormat::csv) == "command,n,h,residual,empirical_order,extra\n");
}

TEST_CASE("CSV layout") {
  auto r = one_row();
  r.rows.push_back({128, 1.0 / 128, std::nullopt, std::nullopt, {}});
  const auto csv = emit(r, OutputFormat::csv);
  CHECK(csv ==
        "command,n,h,residual,empirical_order,extra\n"
        "integrate,64,0.015625,0.30000000000000004,1.5000000000000002,"
        "t=0.33333333333333331;k=-7;ok=false;name=ramp(0.25)\n"
        "integrate,128,0.0078125,,,\n");
  CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("CSV quotes fields containing separators") {
  Report r;
  r.command = "verify-titchmarsh";
  ReportRow row;
  row.extra = {{"probe", std::string("ramp(0.1),ramp(0.2)")}};
  r.rows.push_back(row);
  const auto csv = emit(r, OutputFormat::csv);
  CHECK(csv.find(",\"probe=ramp(0.1),ramp(0.2)\"\n") != std::string::npos);
}

TEST_CASE("JSON round-trips at 17 digits") {
  const auto r = one_row();
  const auto text = emit(r, OutputFormat::json);
  const auto j = json::parse(text);

  // Fixed key order at the top level and in rows.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(text.find("\"schema_version\"") < text.find("\"command\""));
  CHECK(text.find("\"command\"") < text.find("\"config\""));
  CHECK(text.find("\"config\"") < text.find("\"passed\""));
  CHECK(text.find("\"passed\"") < text.find("\"rows\""));
  CHECK(keys.size() == 5);
  CHECK(text.find("wall_time") == std::string::npos);

  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "integrate");
  CHECK(j["passed"] == true);
  CHECK(j["config"]["a"].get<double>() == 0.0);
  CHECK(j["config"]["n"].get<std::int64_t>() == 64);
  CHECK(j["config"]["probe"] == "cos");
  CHECK(j["config"]["exact"] == true);
  const auto& row = j["rows"][0];
  CHECK(row["n"].get<std::size_t>() == 64);
  CHECK(row["h"].get<double>() == r.rows[0].h);
  CHECK(row["residual"].get<double>() == *r.rows[0].residual);
  CHECK(row["empirical_order"].get<double>() == *r.rows[0].empirical_order);
  CHECK(row["extra"]["t"].get<double>() == 1.0 / 3.0);
  CHECK(row["extra"]["k"].get<std::int64_t>() == -7);
  CHECK(row["extra"]["ok"] == false);
  CHECK(row["extra"]["name"] == "ramp(0.25)");
}

TEST_CASE("JSON writes missing and non-finite numbers as null") {
  Report r;
  r.command = "x\"y";
  ReportRow row;
  row.residual = NAN;
  row.extra = {{"big", INFINITY}};
  r.rows.push_back(row);
  const auto j = json::parse(emit(r, OutputFormat::json));
  CHECK(j["command"] == "x\"y");
  CHECK(j["rows"][0]["residual"].is_null());
  CHECK(j["rows"][0]["empirical_order"].is_null());
  CHECK(j["rows"][0]["extra"]["big"].is_null());
}

TEST_CASE("emit is deterministic") {
  auto a = one_row();
  auto b = one_row();
  b.wall_time_ms = 999.0;
  CHECK(emit(a, OutputFormat::csv) == emit(b, OutputFormat::csv));
  CHECK(emit(a, OutputFormat::json) == emit(b, OutputFormat::json));
}

TEST_CASE("empirical_order") {
  CHECK(*empirical_order(1.0, 0.25) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(*empirical_order(1.0, 1.0 / 27.0, 3.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK_FALSE(empirical_order(0.0, 1.0).has_value());
  CHECK_FALSE(empirical_order(1.0, 0.0).has_value());
  CHECK_FALSE(empirical_order(1.0, NAN).has_value());

  std::vector<ReportRow> rows(3);
  rows[0].residual = 0.4;
  rows[1].residual = 0.1;
  rows[2].residual = 0.025;
  fill_empirical_orders(rows);
  CHECK_FALSE(rows[0].empirical_order.has_value());
  CHECK(*rows[1].empirical_order == doctest::Approx(2.0));
  CHECK(*rows[2].empirical_order == doctest::Approx(2.0));
}

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "dmoments/report.hpp"

using namespace dmoments;
using namespace dmoments::report;

namespace {
const char* kFig1 = R"({
  "quantity": "edm", "n": 0, "k": 0,
  "fixed": {"epsilon_eV": 2.6e5},
  "axis": "B_tesla",
  "grid": {"min": 1e-9, "max": 4e-7, "points": 100, "spacing": "linear"}
})";

std::string schema_field(const std::string& json) {
  try {
    parse_sweep_spec(json);
  } catch (const SchemaError& e) {
    return e.field();
  }
  return "<none>";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

std::string csv_of(const SweepSpec& spec) {
  std::ostringstream out;
  write_csv(out, run_sweep(spec));
  return out.str();
}
}  // namespace

TEST_CASE("sweep spec parsing") {
  auto spec = parse_sweep_spec(kFig1);
  CHECK(spec.quantity == Quantity::Edm);
  CHECK(spec.axis == Axis::BTesla);
  REQUIRE(spec.fixed.has_value());
  CHECK(spec.fixed->name == Axis::EpsilonEV);
  CHECK(spec.fixed->value == 2.6e5);
  CHECK(spec.grid.points == 100);
}

TEST_CASE("sweep spec schema errors name the field") {
  std::string base = kFig1;
  CHECK(schema_field(replace(base, "\"points\": 100", "\"points\": 1")) == "grid.points");
  CHECK(schema_field(replace(base, "\"max\": 4e-7", "\"max\": 1e-10")) == "grid.max");
  CHECK(schema_field(replace(base, "\"edm\"", "\"charge\"")) == "quantity");
  CHECK(schema_field(replace(base, "\"B_tesla\"", "\"volts\"")) == "axis");
  CHECK(schema_field(replace(base, "\"n\": 0", "\"n\": -1")) == "n");
  CHECK(schema_field(replace(base, "\"k\": 0,", "\"k\": 0, \"colour\": 1,")) == "colour");
  CHECK(schema_field(replace(base, "\"linear\"", "\"cubic\"")) == "grid.spacing");
  CHECK(schema_field(replace(base, "\"epsilon_eV\"", "\"B_gauss\"")) == "fixed.B_gauss");
  CHECK(schema_field(replace(base, "\"min\": 1e-9", "\"min\": -1e-9")) == "grid.min");
  CHECK(schema_field("[1, 2]") == "<document>");
  CHECK(schema_field("{not json") == "<document>");
  CHECK_THROWS_AS(load_sweep_spec("/nonexistent/sweep.json"), IoError);
}

TEST_CASE("grid values") {
  auto lin = grid_values({1.0, 3.0, 3, Spacing::Linear});
  REQUIRE(lin.size() == 3);
  CHECK(lin[1] == 2.0);
  CHECK(lin.back() == 3.0);
  auto lg = grid_values({1e-3, 1e3, 7, Spacing::Log});
  REQUIRE(lg.size() == 7);
  CHECK(lg.front() == 1e-3);
  CHECK(lg.back() == 1e3);
  CHECK(std::abs(lg[3] - 1.0) < 1e-15);
}

TEST_CASE("fig 1 sweep") {
  auto rows = run_sweep(parse_sweep_spec(kFig1));
  REQUIRE(rows.size() == 100);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].value > rows[i - 1].value);
    CHECK(rows[i].axis_value > rows[i - 1].axis_value);
  }
  for (const auto& r : rows) CHECK(r.regime == moments::Regime::HighKinetic);
}

TEST_CASE("fig 2 sweep in joules") {
  auto spec = parse_sweep_spec(R"({
    "quantity": "edm", "n": 0, "k": 0,
    "fixed": {"B_tesla": 1e-10},
    "axis": "epsilon_J",
    "grid": {"min": 1e-14, "max": 3.1622776601683795e-13, "points": 60, "spacing": "log"}
  })");
  auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 60);
  CHECK(std::abs(rows.front().epsilon_eV - 1e-14 / 1.602176634e-19) < 1e-9 * rows.front().epsilon_eV);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].value < rows[i - 1].value);
}

TEST_CASE("two points give two rows, csv is stable") {
  auto spec = parse_sweep_spec(replace(kFig1, "\"points\": 100", "\"points\": 2"));
  std::string a = csv_of(spec);
  std::string b = csv_of(spec);
  CHECK(a == b);
  std::istringstream in(a);
  std::string line;
  int lines = 0;
  std::getline(in, line);
  CHECK(line == kCsvHeader);
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 2);

  auto big = parse_sweep_spec(kFig1);
  CHECK(csv_of(big) == csv_of(big));
}

TEST_CASE("mdm and spectrum sweeps") {
  auto mdm = run_sweep(parse_sweep_spec(R"({"quantity": "mdm", "n": 1, "k": 0,
    "fixed": {"epsilon_eV": 1e3}, "axis": "B_gauss",
    "grid": {"min": 1, "max": 1e4, "points": 5, "spacing": "log"}})"));
  REQUIRE(mdm.size() == 5);
  CHECK(mdm.back().B_tesla == doctest::Approx(1.0));
  CHECK(mdm.front().value_unit == "J/T");

  auto spec = run_sweep(parse_sweep_spec(R"({"quantity": "spectrum", "n": 0, "k": 0,
    "axis": "B_tesla", "grid": {"min": 1, "max": 1e10, "points": 3, "spacing": "log"}})"));
  REQUIRE(spec.size() == 3);
  CHECK(std::abs(spec.back().value - 1201774.8278830555) < 1e-6);
}

TEST_CASE("number formatting") {
  CHECK(format_number(7.2057098626609622e-20) == "7.20570986266e-20");
  CHECK(format_number(1.0) == "1.00000000000e+00");
}

TEST_CASE("svg output") {
  auto spec = parse_sweep_spec(replace(kFig1, "\"points\": 100", "\"points\": 5"));
  std::ostringstream out;
  write_svg(out, run_sweep(spec), "edm");
  auto svg = out.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
}

TEST_CASE("published tables") {
  const auto& t2 = published_table(2);
  REQUIRE(t2.size() == 5);
  CHECK(t2[0].value_text == "3.1x10^-24");
  CHECK(t2[0].value_ecm == 3.1e-24);
  CHECK(t2[0].B_gauss_low == 1.0e-3);
  CHECK(t2[1].epsilon_eV == 6.0e6);
  CHECK(t2[1].B_gauss_low == 2.0e-6);
  CHECK(t2[1].value_ecm == 5.9e-27);

  const auto& t1 = published_table(1);
  REQUIRE(t1.size() == 4);
  CHECK(t1[2].epsilon_eV == 1e5);
  CHECK(t1[2].B_gauss_low == 1e3);
  CHECK(t1[2].B_gauss_high == 6e3);
  CHECK(t1[2].value_ecm == 3e-20);

  CHECK_THROWS_AS(published_table(3), InvalidInputError);
  CHECK_THROWS_AS(compare_table(0), InvalidInputError);
}

TEST_CASE("comparison rows") {
  auto rows = compare_table(2);
  REQUIRE(rows.size() == 5);
  CHECK(std::abs(rows[0].computed_value_ecm - 7.2057098626609622e-20) < 1e-11 * 7.2e-20);
  for (const auto& r : rows) {
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio > 0.0);
    CHECK(std::abs(r.ratio - r.computed_value_ecm / r.published_value_ecm) < 1e-12 * r.ratio);
  }
  CHECK(compare_table(1).size() == 8);

  auto hit = find_published_entry(2.6e5, 1e-3);
  REQUIRE(hit.has_value());
  CHECK(hit->source == "T2-1");
  CHECK(find_published_entry(1e5, 3e3)->source == "T1-c");
  CHECK(!find_published_entry(1.0, 1.0).has_value());

  std::ostringstream out;
  print_comparison(out, 2, rows);
  CHECK(out.str().find("3.1x10^-24") != std::string::npos);
}

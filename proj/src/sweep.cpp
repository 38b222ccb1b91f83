#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dmoments/constants_units.hpp"
#include "dmoments/report.hpp"

namespace dmoments::report {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw SchemaError(where.empty() ? key : where + "." + key, "unknown key");
    }
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw SchemaError(path, "missing required field");
  return obj.at(key);
}

double require_number(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_number()) throw SchemaError(path, "must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(path, "must be finite");
  return d;
}

int require_int(const json& obj, const std::string& key, const std::string& path) {
  const auto& v = require(obj, key, path);
  if (!v.is_number_integer()) throw SchemaError(path, "must be an integer");
  return v.get<int>();
}

Axis parse_axis(std::string_view s, const std::string& path) {
  if (s == "B_tesla") return Axis::BTesla;
  if (s == "B_gauss") return Axis::BGauss;
  if (s == "epsilon_eV") return Axis::EpsilonEV;
  if (s == "epsilon_J") return Axis::EpsilonJ;
  throw SchemaError(path, "unknown axis '" + std::string(s) + "'");
}

double to_tesla(Axis a, double v) {
  return a == Axis::BGauss ? units::tesla_from_gauss(v) : v;
}

double to_ev(Axis a, double v) {
  return a == Axis::EpsilonJ ? units::ev_from_joule(v) : v;
}

SweepRow evaluate(const SweepSpec& spec, double axis_value) {
  double B = 0.0;
  double eps = 0.0;
  if (is_field_axis(spec.axis)) {
    B = to_tesla(spec.axis, axis_value);
    if (spec.fixed) eps = to_ev(spec.fixed->name, spec.fixed->value);
  } else {
    eps = to_ev(spec.axis, axis_value);
    B = to_tesla(spec.fixed->name, spec.fixed->value);
  }

  SweepRow row;
  row.axis = spec.axis;
  row.axis_value = axis_value;
  row.qn = spec.qn;
  row.B_tesla = B;
  switch (spec.quantity) {
    case Quantity::Edm: {
      const auto r = moments::edm_closed(spec.qn, B, eps);
      row.epsilon_eV = eps;
      row.value = r.value;
      row.value_unit = r.unit;
      break;
    }
    case Quantity::Mdm: {
      const auto r = moments::mdm_finite_field(spec.qn, B, eps);
      row.epsilon_eV = eps;
      row.value = r.value;
      row.value_unit = r.unit;
      break;
    }
    case Quantity::Spectrum: {
      const auto state = build_state(spec.qn, B);
      row.epsilon_eV = state.epsilon;
      row.value = state.E;
      row.value_unit = "eV";
      break;
    }
  }
  row.scale_eV = units::magnetic_energy_scale_eV(B);
  row.regime = moments::classify_regime(row.epsilon_eV, B);
  row.method = moments::Method::ClosedForm;
  return row;
}

void validate_row(const SweepRow& r) {
  const bool ok = std::isfinite(r.value) && r.value > 0.0 && r.B_tesla > 0.0 &&
                  r.epsilon_eV > 0.0 && std::isfinite(r.scale_eV) &&
                  r.qn.n >= 0 && r.qn.k >= 0;
  if (!ok) throw InvalidInputError("sweep row failed validation at axis value " +
                                   format_number(r.axis_value));
}

}  // namespace

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::Edm: return "edm";
    case Quantity::Mdm: return "mdm";
    case Quantity::Spectrum: return "spectrum";
  }
  return "unknown";
}

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::BTesla: return "B_tesla";
    case Axis::BGauss: return "B_gauss";
    case Axis::EpsilonEV: return "epsilon_eV";
    case Axis::EpsilonJ: return "epsilon_J";
  }
  return "unknown";
}

bool is_field_axis(Axis a) { return a == Axis::BTesla || a == Axis::BGauss; }

SweepSpec parse_sweep_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError("<document>", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("<document>", "must be a JSON object");
  reject_unknown_keys(doc, {"quantity", "n", "k", "fixed", "axis", "grid"}, "");

  SweepSpec spec;
  const auto& q = require(doc, "quantity", "quantity");
  if (!q.is_string()) throw SchemaError("quantity", "must be a string");
  const auto qs = q.get<std::string>();
  if (qs == "edm") {
    spec.quantity = Quantity::Edm;
  } else if (qs == "mdm") {
    spec.quantity = Quantity::Mdm;
  } else if (qs == "spectrum") {
    spec.quantity = Quantity::Spectrum;
  } else {
    throw SchemaError("quantity", "must be one of edm, mdm, spectrum");
  }

  spec.qn.n = require_int(doc, "n", "n");
  spec.qn.k = require_int(doc, "k", "k");
  if (spec.qn.n < 0) throw SchemaError("n", "must be >= 0");
  if (spec.qn.k < 0) throw SchemaError("k", "must be >= 0");

  const auto& axis = require(doc, "axis", "axis");
  if (!axis.is_string()) throw SchemaError("axis", "must be a string");
  spec.axis = parse_axis(axis.get<std::string>(), "axis");

  if (doc.contains("fixed")) {
    const auto& fixed = doc.at("fixed");
    if (!fixed.is_object() || fixed.size() != 1) {
      throw SchemaError("fixed", "must be an object with exactly one entry");
    }
    const auto& [name, value] = *fixed.items().begin();
    const Axis fixed_axis = parse_axis(name, "fixed." + name);
    if (!value.is_number() || !std::isfinite(value.get<double>()) ||
        value.get<double>() <= 0.0) {
      throw SchemaError("fixed." + name, "must be a positive number");
    }
    if (is_field_axis(fixed_axis) == is_field_axis(spec.axis)) {
      throw SchemaError("fixed." + name, "must be the quantity not swept by axis");
    }
    spec.fixed = FixedValue{fixed_axis, value.get<double>()};
  }
  if (spec.quantity == Quantity::Spectrum) {
    if (!is_field_axis(spec.axis)) {
      throw SchemaError("axis", "spectrum sweeps need a field axis");
    }
  } else if (!spec.fixed) {
    throw SchemaError("fixed", "missing required field");
  }

  const auto& grid = require(doc, "grid", "grid");
  if (!grid.is_object()) throw SchemaError("grid", "must be an object");
  reject_unknown_keys(grid, {"min", "max", "points", "spacing"}, "grid");
  spec.grid.min = require_number(grid, "min", "grid.min");
  spec.grid.max = require_number(grid, "max", "grid.max");
  spec.grid.points = require_int(grid, "points", "grid.points");
  const auto& spacing = require(grid, "spacing", "grid.spacing");
  if (spacing == "linear") {
    spec.grid.spacing = Spacing::Linear;
  } else if (spacing == "log") {
    spec.grid.spacing = Spacing::Log;
  } else {
    throw SchemaError("grid.spacing", "must be 'linear' or 'log'");
  }
  if (!(spec.grid.min < spec.grid.max)) throw SchemaError("grid.max", "must exceed grid.min");
  if (spec.grid.points < 2) throw SchemaError("grid.points", "must be >= 2");
  if (spec.grid.min <= 0.0) throw SchemaError("grid.min", "must be positive");
  return spec;
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read sweep config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_spec(buffer.str());
}

std::vector<double> grid_values(const Grid& grid) {
  std::vector<double> out(static_cast<std::size_t>(grid.points));
  const double last = grid.points - 1.0;
  for (int i = 0; i < grid.points; ++i) {
    const double t = i / last;
    if (grid.spacing == Spacing::Linear) {
      out[i] = grid.min + (grid.max - grid.min) * t;
    } else {
      out[i] = std::exp(std::log(grid.min) + (std::log(grid.max) - std::log(grid.min)) * t);
    }
  }
  out.front() = grid.min;
  out.back() = grid.max;
  return out;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const auto axis = grid_values(spec.grid);
  std::vector<SweepRow> rows(axis.size());
  std::vector<std::exception_ptr> errors(axis.size());

  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, 8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < axis.size(); i += workers) {
          try {
            rows[i] = evaluate(spec, axis[i]);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  for (const auto& r : rows) validate_row(r);
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.axis) << ',' << format_number(r.axis_value) << ','
        << format_number(r.B_tesla) << ',' << format_number(r.epsilon_eV) << ','
        << r.qn.n << ',' << r.qn.k << ',' << format_number(r.scale_eV) << ','
        << moments::to_string(r.regime) << ',' << format_number(r.value) << ','
        << r.value_unit << ',' << moments::to_string(r.method) << '\n';
  }
  if (!out) throw IoError("failed writing CSV output");
}

void write_svg(std::ostream& out, const std::vector<SweepRow>& rows,
               std::string_view title) {
  if (rows.size() < 2) throw InvalidInputError("SVG needs at least two rows");
  constexpr double kWidth = 640, kHeight = 400, kMargin = 70;
  const auto [xmin_it, xmax_it] = std::minmax_element(
      rows.begin(), rows.end(), [](auto& a, auto& b) { return a.axis_value < b.axis_value; });
  const auto [ymin_it, ymax_it] = std::minmax_element(
      rows.begin(), rows.end(), [](auto& a, auto& b) { return a.value < b.value; });
  const double x0 = xmin_it->axis_value, x1 = xmax_it->axis_value;
  const double y0 = ymin_it->value;
  double y1 = ymax_it->value;
  if (y1 == y0) y1 = y0 + 1.0;
  auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) {
    return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"25\" text-anchor=\"middle\">" << title
      << "</text>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
      << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
      << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (const auto& r : rows) out << px(r.axis_value) << ',' << py(r.value) << ' ';
  out << "\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 20
      << "\" text-anchor=\"middle\">" << to_string(rows.front().axis) << "</text>\n";
  out << "<text x=\"20\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 20 "
      << kHeight / 2 << ")\" text-anchor=\"middle\">value (" << rows.front().value_unit
      << ")</text>\n";
  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 18
      << "\" font-size=\"10\">" << format_number(x0) << "</text>\n";
  out << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 18
      << "\" font-size=\"10\" text-anchor=\"end\">" << format_number(x1) << "</text>\n";
  out << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin
      << "\" font-size=\"10\" text-anchor=\"end\">" << format_number(y0) << "</text>\n";
  out << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin
      << "\" font-size=\"10\" text-anchor=\"end\">" << format_number(y1) << "</text>\n";
  out << "</svg>\n";
  if (!out) throw IoError("failed writing SVG output");
}

}  // namespace dmoments::report

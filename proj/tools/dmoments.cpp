// Command-line front end: point queries, sweeps, published-table comparisons and
// the verification suite.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dmoments/constants_units.hpp"
#include "dmoments/error.hpp"
#include "dmoments/gordon_densities.hpp"
#include "dmoments/landau_states.hpp"
#include "dmoments/moments.hpp"
#include "dmoments/report.hpp"
#include "dmoments/special_functions.hpp"

namespace {

using namespace dmoments;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct PointOptions {
  int n = 0;
  int k = 0;
  std::optional<double> B_tesla;
  std::optional<double> B_gauss;
  std::optional<double> epsilon_eV;
  std::optional<double> epsilon_J;
  bool quadrature = false;
  bool compare_paper = false;
  std::string out;
};

void add_point_flags(CLI::App* cmd, PointOptions& o, bool with_epsilon) {
  cmd->add_option("--n", o.n, "principal quantum number (>= 0)");
  cmd->add_option("--k", o.k, "angular-momentum quantum number (>= 0)");
  auto* b = cmd->add_option("--B", o.B_tesla, "magnetic field in tesla");
  auto* bg = cmd->add_option("--B-gauss", o.B_gauss, "magnetic field in gauss");
  b->excludes(bg);
  if (with_epsilon) {
    auto* ev = cmd->add_option("--epsilon-eV", o.epsilon_eV, "kinetic energy in eV");
    auto* ej = cmd->add_option("--epsilon-J", o.epsilon_J, "kinetic energy in joule");
    ev->excludes(ej);
    cmd->add_flag("--quadrature", o.quadrature, "also integrate the Gordon densities");
  }
  cmd->add_option("--out", o.out, "CSV output path");
}

double field_tesla(const PointOptions& o) {
  if (o.B_tesla) return *o.B_tesla;
  if (o.B_gauss) return units::tesla_from_gauss(*o.B_gauss);
  throw InvalidInputError("one of --B or --B-gauss is required");
}

std::optional<double> kinetic_eV(const PointOptions& o) {
  if (o.epsilon_eV) return *o.epsilon_eV;
  if (o.epsilon_J) return units::ev_from_joule(*o.epsilon_J);
  return std::nullopt;
}

// --out wins; otherwise DMOMENTS_OUT_DIR/<default_name>; otherwise nothing.
std::optional<fs::path> output_path(const std::string& out, const std::string& default_name) {
  if (!out.empty()) return fs::path(out);
  if (const char* dir = std::getenv("DMOMENTS_OUT_DIR"); dir && *dir) {
    return fs::path(dir) / default_name;
  }
  return std::nullopt;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw report::IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.close();
  if (!f) throw report::IoError("failed writing " + path.string());
}

std::string point_csv(const moments::MomentResult& r) {
  report::SweepRow row;
  row.axis = report::Axis::BTesla;
  row.axis_value = r.B0_tesla;
  row.B_tesla = r.B0_tesla;
  row.epsilon_eV = r.epsilon_eV;
  row.qn = r.qn;
  row.scale_eV = r.scale_eV;
  row.regime = r.regime;
  row.value = r.value;
  row.value_unit = r.unit;
  row.method = r.method;
  std::ostringstream s;
  report::write_csv(s, {row});
  return s.str();
}

int cmd_spectrum(const PointOptions& o) {
  const QuantumNumbers qn{o.n, o.k};
  validate(qn);
  const double B = field_tesla(o);
  const double E = energy(qn, B);
  std::printf("n = %d, k = %d, B = %s T\n", qn.n, qn.k, report::format_number(B).c_str());
  std::printf("scale_eV      %s\n",
              report::format_number(units::magnetic_energy_scale_eV(B)).c_str());
  std::printf("E_eV          %s\n", report::format_number(E).c_str());
  if (B == 0.0) {
    std::printf("(zero field: degenerate, no bound Landau state)\n");
    return kExitOk;
  }
  const auto s = build_state(qn, B);
  std::printf("epsilon_eV    %s\n", report::format_number(s.epsilon).c_str());
  std::printf("delta         %s\n", report::format_number(s.delta).c_str());
  std::printf("N1_over_N2    %s\n", report::format_number(s.N1_over_N2).c_str());
  std::printf("N2_sq         %s\n", report::format_number(s.N2_sq).c_str());
  if (auto path = output_path(o.out, "spectrum.csv")) {
    report::SweepRow row;
    row.axis_value = B;
    row.B_tesla = B;
    row.epsilon_eV = s.epsilon;
    row.qn = qn;
    row.scale_eV = s.scale;
    row.regime = moments::classify_regime(s.epsilon, B);
    row.value = s.E;
    row.value_unit = "eV";
    std::ostringstream csv;
    report::write_csv(csv, {row});
    write_file(*path, csv.str());
  }
  return kExitOk;
}

int cmd_edm(const PointOptions& o) {
  const QuantumNumbers qn{o.n, o.k};
  const double B = field_tesla(o);
  if (!(B > 0.0)) throw InvalidInputError("magnetic field must be positive");
  const double eps = kinetic_eV(o).value_or(build_state(qn, B).epsilon);
  const auto r = moments::edm_closed(qn, B, eps);

  std::printf("eEDM |p1| = |p2|  %s e*cm  (p2 = i p1)\n", report::format_number(r.value).c_str());
  std::printf("regime            %s\n", std::string(moments::to_string(r.regime)).c_str());
  std::printf("scale_eV          %s\n", report::format_number(r.scale_eV).c_str());
  std::printf("epsilon_eV        %s\n", report::format_number(eps).c_str());
  std::printf("b_max_T           %s\n", report::format_number(moments::b_max(qn, eps)).c_str());
  if (o.quadrature) {
    const auto source = gordon::DipoleSource::from_kinetic_energy(qn, B, eps);
    const double q = gordon::polarization_quadrature(source).p1_ecm;
    std::printf("quadrature        %s e*cm  (relative difference %.3e)\n",
                report::format_number(q).c_str(), std::abs(q - r.value) / r.value);
  }
  if (o.compare_paper) {
    if (auto entry = report::find_published_entry(eps, units::gauss_from_tesla(B))) {
      std::printf("published (%s)  %s e*cm  (computed / published = %.3e, informational)\n",
                  entry->source.c_str(), entry->value_text.c_str(), r.value / entry->value_ecm);
    } else {
      std::printf("published         no tabulated entry for these inputs\n");
    }
  }
  if (auto path = output_path(o.out, "edm.csv")) write_file(*path, point_csv(r));
  return kExitOk;
}

int cmd_mdm(const PointOptions& o) {
  const QuantumNumbers qn{o.n, o.k};
  const double B = field_tesla(o);
  if (!(B > 0.0)) throw InvalidInputError("magnetic field must be positive");
  const double eps = kinetic_eV(o).value_or(build_state(qn, B).epsilon);
  const auto r = moments::mdm_finite_field(qn, B, eps);
  std::printf("Bohr magneton     %s J/T\n", report::format_number(moments::mdm_closed()).c_str());
  std::printf("finite field      %s J/T  (ratio %.12g)\n", report::format_number(r.value).c_str(),
              r.value / moments::mdm_closed());
  if (o.quadrature) {
    const auto source = gordon::DipoleSource::from_kinetic_energy(qn, B, eps);
    std::printf("quadrature        %s J/T\n",
                report::format_number(gordon::magnetization_quadrature(source)).c_str());
  }
  if (auto path = output_path(o.out, "mdm.csv")) write_file(*path, point_csv(r));
  return kExitOk;
}

int cmd_sweep(const std::string& config, const std::string& out, const std::string& svg) {
  const auto spec = report::load_sweep_spec(config);
  const auto rows = report::run_sweep(spec);
  std::ostringstream csv;
  report::write_csv(csv, rows);
  const std::string name = std::string("sweep_") + std::string(report::to_string(spec.quantity));
  if (auto path = output_path(out, name + ".csv")) {
    write_file(*path, csv.str());
  } else {
    std::cout << csv.str();
  }
  if (!svg.empty()) {
    std::ostringstream s;
    report::write_svg(s, rows, name);
    write_file(svg, s.str());
  }
  return kExitOk;
}

int cmd_compare(int table_id, const std::string& out) {
  const auto rows = report::compare_table(table_id);
  report::print_comparison(std::cout, table_id, rows);
  if (auto path = output_path(out, "compare_table" + std::to_string(table_id) + ".csv")) {
    std::ostringstream csv;
    report::write_comparison_csv(csv, rows);
    write_file(*path, csv.str());
  }
  return kExitOk;
}

int cmd_verify(double gamma_fault) {
  special::testing::set_gamma_fault(gamma_fault);
  const auto groups = report::run_verification(std::cout);
  bool all = true;
  double total = 0.0;
  for (const auto& g : groups) {
    all = all && g.passed;
    total += g.seconds;
  }
  std::printf("%s (%.2f s)\n", all ? "all groups passed" : "verification FAILED", total);
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dipole moments of a Dirac electron in a constant magnetic field"};
  app.require_subcommand(1);

  PointOptions spectrum_opts, edm_opts, mdm_opts;
  auto* spectrum = app.add_subcommand("spectrum", "Landau level energy and state data");
  add_point_flags(spectrum, spectrum_opts, false);
  auto* edm = app.add_subcommand("edm", "electric dipole moment (closed form)");
  add_point_flags(edm, edm_opts, true);
  edm->add_flag("--compare-paper", edm_opts.compare_paper, "show the tabulated published value");
  auto* mdm = app.add_subcommand("mdm", "magnetic dipole moment");
  add_point_flags(mdm, mdm_opts, true);

  std::string sweep_config, sweep_out, sweep_svg;
  auto* sweep = app.add_subcommand("sweep", "evaluate a JSON sweep config into CSV");
  sweep->add_option("config", sweep_config, "sweep config (JSON)")->required();
  sweep->add_option("--out", sweep_out, "CSV output path");
  sweep->add_option("--svg", sweep_svg, "SVG chart output path");

  int table_id = 0;
  std::string compare_out;
  auto* compare = app.add_subcommand("compare", "published tables next to computed values");
  compare->add_option("table", table_id, "table number (1 or 2)")->required();
  compare->add_option("--out", compare_out, "CSV output path");

  double gamma_fault = 0.0;
  auto* verify = app.add_subcommand("verify", "run the invariant and oracle suite");
  verify->add_option("--fault-gamma", gamma_fault, "test hook: perturb Gamma")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*spectrum) return cmd_spectrum(spectrum_opts);
    if (*edm) return cmd_edm(edm_opts);
    if (*mdm) return cmd_mdm(mdm_opts);
    if (*sweep) return cmd_sweep(sweep_config, sweep_out, sweep_svg);
    if (*compare) return cmd_compare(table_id, compare_out);
    if (*verify) return cmd_verify(gamma_fault);
  } catch (const report::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    std::cerr << app.help() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

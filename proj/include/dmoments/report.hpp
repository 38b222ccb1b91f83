#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmoments/error.hpp"
#include "dmoments/landau_states.hpp"
#include "dmoments/moments.hpp"

namespace dmoments::report {

// A sweep config that fails validation; field() names the offending key.
class SchemaError : public InvalidInputError {
 public:
  SchemaError(std::string field, const std::string& what)
      : InvalidInputError(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class Quantity { Edm, Mdm, Spectrum };

// Physical axes. Gauss and joule are boundary units, converted on use.
enum class Axis { BTesla, BGauss, EpsilonEV, EpsilonJ };
enum class Spacing { Linear, Log };

std::string_view to_string(Quantity q);
std::string_view to_string(Axis a);
bool is_field_axis(Axis a);

struct Grid {
  double min = 0.0;
  double max = 0.0;
  int points = 2;
  Spacing spacing = Spacing::Linear;
};

struct FixedValue {
  Axis name = Axis::EpsilonEV;
  double value = 0.0;
};

struct SweepSpec {
  Quantity quantity = Quantity::Edm;
  QuantumNumbers qn;
  std::optional<FixedValue> fixed;  // not needed for spectrum sweeps
  Axis axis = Axis::BTesla;
  Grid grid;
};

/// Parses and validates the JSON sweep config. Unknown keys are rejected.
SweepSpec parse_sweep_spec(std::string_view json_text);
SweepSpec load_sweep_spec(const std::filesystem::path& path);

std::vector<double> grid_values(const Grid& grid);

struct SweepRow {
  Axis axis = Axis::BTesla;
  double axis_value = 0.0;
  double B_tesla = 0.0;
  double epsilon_eV = 0.0;
  QuantumNumbers qn;
  double scale_eV = 0.0;
  moments::Regime regime = moments::Regime::Crossover;
  double value = 0.0;
  std::string_view value_unit;
  moments::Method method = moments::Method::ClosedForm;
};

/// Evaluates every grid point (concurrently) and returns rows in ascending
/// axis order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "axis_name,axis_value,B_tesla,epsilon_eV,n,k,scale_eV,regime,value,"
    "value_unit,method";

/// Scientific notation with 12 significant digits.
std::string format_number(double v);

/// Writes header and rows; every row is re-validated first.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Single-polyline chart of value against the axis.
void write_svg(std::ostream& out, const std::vector<SweepRow>& rows,
               std::string_view title);

// Transcribed published tables.
struct PublishedEntry {
  std::string source;         // "T1-a", "T2-1", ...
  std::string epsilon_text;   // as printed, eV
  double epsilon_eV;
  std::string B_text;         // as printed, G
  double B_gauss_low;
  double B_gauss_high;        // equal to low for single values
  std::string value_text;     // as printed, e cm
  double value_ecm;
  std::string bound_text;     // Table 2 only
};

const std::vector<PublishedEntry>& published_table(int table_id);

struct ComparisonRow {
  std::string source;
  double epsilon_eV = 0.0;
  double B_gauss = 0.0;
  std::string B_text;
  std::string published_value_text;
  double published_value_ecm = 0.0;
  double computed_value_ecm = 0.0;
  double ratio = 0.0;
  std::string bound_text;
};

/// Published values next to edm_closed at n = k = 0. Range entries give one row
/// per end point. Informational only: the quantum numbers behind the
/// published values are not stated.
std::vector<ComparisonRow> compare_table(int table_id);

void print_comparison(std::ostream& out, int table_id,
                      const std::vector<ComparisonRow>& rows);
void write_comparison_csv(std::ostream& out,
                          const std::vector<ComparisonRow>& rows);

/// Looks up a published entry whose epsilon and field match (relative 1e-9,
/// field inside the printed range).
std::optional<PublishedEntry> find_published_entry(double epsilon_eV, double B_gauss);

struct CheckGroup {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the invariant and oracle groups; `log` receives one line per group.
std::vector<CheckGroup> run_verification(std::ostream& log);

}  // namespace dmoments::report

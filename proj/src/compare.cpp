#include <cmath>
#include <cstdio>
#include <ostream>

#include "dmoments/constants_units.hpp"
#include "dmoments/report.hpp"

namespace dmoments::report {
namespace {

// Transcribed as printed. Table 1 quotes field ranges [1,6] x 10^p G.
const std::vector<PublishedEntry> kTable1 = {
    {"T1-a", "10^10", 1e10, "[1,6]x10^-3", 1e-3, 6e-3, "3x10^-28", 3e-28, ""},
    {"T1-b", "10^10", 1e10, "[1,6]x10^2", 1e2, 6e2, "9x10^-26", 9e-26, ""},
    {"T1-c", "10^5", 1e5, "[1,6]x10^3", 1e3, 6e3, "3x10^-20", 3e-20, ""},
    {"T1-d", "10^9", 1e9, "[1,6]x10^3", 1e3, 6e3, "3x10^-24", 3e-24, ""},
};

const std::vector<PublishedEntry> kTable2 = {
    {"T2-1", "2.6x10^5", 2.6e5, "1.0x10^-3", 1.0e-3, 1.0e-3, "3.1x10^-24", 3.1e-24,
     "|d_e| <= 7.7x10^-22 [24]"},
    {"T2-2", "6.0x10^6", 6.0e6, "2.0x10^-6", 2.0e-6, 2.0e-6, "5.9x10^-27", 5.9e-27,
     "|d_e| = 1.3x10^-29 [25]"},
    {"T2-3", "1.0x10^7", 1.0e7, "2.55x10^-2", 2.55e-2, 2.55e-2, "2.3x10^-25", 2.3e-25,
     "|d_e| = (2.7 +/- 8.3)x10^-27 [26]"},
    {"T2-4", "1.0x10^7", 1.0e7, "7.0x10^-3", 7.0e-3, 7.0e-3, "2.1x10^-25", 2.1e-25,
     "|d_e| = 4.0x10^-27 [27]"},
    {"T2-5", "0.1x10^7", 0.1e7, "9.0x10^-3", 9.0e-3, 9.0e-3, "2.0x10^-25", 2.0e-25,
     "|d_e| <= 1.6x10^-27 [28]"},
};

ComparisonRow make_row(const PublishedEntry& e, double B_gauss) {
  ComparisonRow row;
  row.source = e.source;
  row.epsilon_eV = e.epsilon_eV;
  row.B_gauss = B_gauss;
  row.B_text = e.B_text;
  row.published_value_text = e.value_text;
  row.published_value_ecm = e.value_ecm;
  row.computed_value_ecm =
      moments::edm_closed({0, 0}, units::tesla_from_gauss(B_gauss), e.epsilon_eV).value;
  row.ratio = row.computed_value_ecm / row.published_value_ecm;
  row.bound_text = e.bound_text;
  return row;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-9 * std::abs(b); }

}  // namespace

const std::vector<PublishedEntry>& published_table(int table_id) {
  if (table_id == 1) return kTable1;
  if (table_id == 2) return kTable2;
  throw InvalidInputError("unknown table " + std::to_string(table_id) +
                          " (expected 1 or 2)");
}

std::vector<ComparisonRow> compare_table(int table_id) {
  std::vector<ComparisonRow> rows;
  for (const auto& e : published_table(table_id)) {
    rows.push_back(make_row(e, e.B_gauss_low));
    if (e.B_gauss_high != e.B_gauss_low) rows.push_back(make_row(e, e.B_gauss_high));
  }
  return rows;
}

std::optional<PublishedEntry> find_published_entry(double epsilon_eV, double B_gauss) {
  for (int id : {2, 1}) {
    for (const auto& e : published_table(id)) {
      const bool in_range = (B_gauss >= e.B_gauss_low * (1 - 1e-9) &&
                             B_gauss <= e.B_gauss_high * (1 + 1e-9));
      if (close(epsilon_eV, e.epsilon_eV) && in_range) return e;
    }
  }
  return std::nullopt;
}

void print_comparison(std::ostream& out, int table_id,
                      const std::vector<ComparisonRow>& rows) {
  out << "Table " << table_id
      << " (informational; computed with n = 0, k = 0, quantum numbers of the "
         "published values are not stated)\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-12s %-13s %-12s %-14s %-14s %-12s\n",
                "source", "epsilon_eV", "B_G(printed)", "B_G(used)", "published_e*cm",
                "computed_e*cm", "ratio");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-6s %-12.4g %-13s %-12.4g %-14s %-14.4e %-12.4e",
                  r.source.c_str(), r.epsilon_eV, r.B_text.c_str(), r.B_gauss,
                  r.published_value_text.c_str(), r.computed_value_ecm, r.ratio);
    out << line;
    if (!r.bound_text.empty()) out << "  " << r.bound_text;
    out << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "source,epsilon_eV,B_gauss,B_printed,published_value_text,published_value_ecm,"
         "computed_value_ecm,ratio,bound\n";
  for (const auto& r : rows) {
    out << r.source << ',' << format_number(r.epsilon_eV) << ','
        << format_number(r.B_gauss) << ',' << '"' << r.B_text << '"' << ','
        << r.published_value_text << ',' << format_number(r.published_value_ecm) << ','
        << format_number(r.computed_value_ecm) << ',' << format_number(r.ratio)
        << ',' << '"' << r.bound_text << '"' << '\n';
  }
  if (!out) throw IoError("failed writing comparison CSV");
}

}  // namespace dmoments::report

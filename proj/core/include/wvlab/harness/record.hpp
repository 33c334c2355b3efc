#pragma once

#include <array>
#include <filesystem>
#include <string_view>
#include <vector>

namespace wvlab::harness {

/// One diagnostic sample of a sweep entry at time t. f is the Wigner
/// solution, g the matched classical solution, f~ the Husimi transform of f.
struct DiagnosticRow {
  double eps = 0.0;
  double t = 0.0;
  double mass_f = 0.0;
  double l2_f = 0.0;
  double energy_f = 0.0;
  double mass_g = 0.0;
  double l2_g = 0.0;
  double energy_g = 0.0;
  double husimi_min = 0.0;  // min f~
  double husimi_max = 0.0;  // max f~
  double error = 0.0;       // ||f - g||
  double husimi_gap = 0.0;  // ||f~ - f||
  double e_norm = 0.0;      // ||E1 + E2||
  double r1 = 0.0;          // ||(T_eps - T_0) g|| with V from f~
  double support = 0.0;     // support radius of g
  double support_bound = 0.0;
  double h3_g = 0.0;        // sobolev_norm(g, 3)
};

inline constexpr std::array<std::string_view, 17> kRowColumns = {
    "eps",        "t",          "mass_f",     "l2_f",   "energy_f", "mass_g",  "l2_g",    "energy_g", "husimi_min",
    "husimi_max", "error",      "husimi_gap", "e_norm", "r1",       "support", "support_bound", "h3_g"};

std::array<double, kRowColumns.size()> to_array(const DiagnosticRow& r);
DiagnosticRow row_from_array(const std::array<double, kRowColumns.size()>& a);

/// Per-eps totals of one sweep entry.
struct EpsSummary {
  double eps = 0.0;
  double final_error = 0.0;
  double seed_gap = 0.0;          // |1 - N|
  double seed_tail = 0.0;
  double seed_l2 = 0.0;           // ||f0 - g0_seed||
  double seed_min_rel = 0.0;      // min g0_seed / max g0_seed
  double seed_support = 0.0;
  double seed_h3 = 0.0;
  double f0_l1 = 0.0;
  double f0_h3 = 0.0;
  double f0_boundary_mass = 0.0;
  double step_mass_f = 0.0;       // worst |mass(n+1) - mass(n)|
  double step_l2_f = 0.0;         // worst relative L2 change per step
  double energy_drift_f = 0.0;    // max |E(t) - E(0)| / |E(0)|
  double step_mass_g = 0.0;
  double step_l2_g = 0.0;
  double energy_drift_g = 0.0;
  double wall_seconds = 0.0;      // excluded from the CSV
};

inline constexpr std::array<std::string_view, 17> kSummaryColumns = {
    "eps",          "final_error",  "seed_gap",    "seed_tail",      "seed_l2",     "seed_min_rel",
    "seed_support", "seed_h3",      "f0_l1",       "f0_h3",          "f0_boundary_mass", "step_mass_f",
    "step_l2_f",    "energy_drift_f", "step_mass_g", "step_l2_g",    "energy_drift_g"};

std::array<double, kSummaryColumns.size()> to_array(const EpsSummary& s);

struct RunRecord {
  std::vector<DiagnosticRow> rows;  // eps blocks in config order, t increasing
  std::vector<EpsSummary> summary;
};

/// UTF-8 CSV, header row, one line per row, %.17g floats. Throws
/// std::runtime_error on I/O failure.
void emit_csv(const RunRecord& record, const std::filesystem::path& path);
void emit_summary_csv(const RunRecord& record, const std::filesystem::path& path);

/// Reads back a file written by emit_csv.
std::vector<DiagnosticRow> read_csv(const std::filesystem::path& path);

}  // namespace wvlab::harness

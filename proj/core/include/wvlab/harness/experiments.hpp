#pragma once

#include <vector>

#include "wvlab/field.hpp"
#include "wvlab/fit.hpp"
#include "wvlab/harness/config.hpp"
#include "wvlab/harness/record.hpp"
#include "wvlab/schrodinger.hpp"

namespace wvlab::harness {

/// One eps of a sweep: coherent mixture f0, matched classical datum g0,
/// both evolved to T with the shared dt.
struct EntryResult {
  std::vector<DiagnosticRow> rows;
  EpsSummary summary;
  PhaseField f0, g0, f_final, g_final;  // filled only when keep_fields
};

EntryResult run_entry(const RunConfig& cfg, double eps, bool keep_fields = false);

struct ConvergenceResult {
  RunRecord record;
  bool fitted = false;  // false for a one-point eps list
  LogLogFit fit;        // log final error vs log eps
  double wall_seconds = 0.0;
};

/// Runs every eps of the config (cfg.threads at a time) and fits the
/// final-time error rate. Rows come back in config order whatever the
/// completion order. Throws ConfigError for an under-resolved eps.
ConvergenceResult run_convergence(const RunConfig& cfg);

/// Seed-only sweep: the EpsSummary seed and f0 fields, no evolution.
std::vector<EpsSummary> seed_sweep(const RunConfig& cfg);

/// Three weighted coherent states at distinct phase-space points.
OrbitalEnsemble benchmark_ensemble(const PhaseGrid& grid, double eps);

struct OracleResult {
  double eps = 0.0;
  double dt = 0.0;
  double discrepancy = 0.0;       // at dt
  double discrepancy_half = 0.0;  // at dt/2
  double ratio() const { return discrepancy / discrepancy_half; }
};

/// oracle_compare on the benchmark ensemble (oracle grid, oracle eps,
/// oracle T) at cfg.dt and cfg.dt/2.
OracleResult run_oracle(const RunConfig& cfg);

struct HsSample {
  std::string name;
  HsBridge bridge;
  double wigner_min = 0.0;
};

/// HS bridge on: one coherent state, ground+excited (1/2,1/2), the excited
/// state alone (negative Wigner function), the benchmark mixture.
std::vector<HsSample> hs_suite(const RunConfig& cfg);

struct ShiftSample {
  std::string field;
  double eps = 0.0;
  double before = 0.0, after = 0.0;
  double expected = 0.0;  // d eps / 2
};

/// Second-moment shift on three probability fields at eps = 0.1 and 0.05.
std::vector<ShiftSample> moment_shift_suite(const RunConfig& cfg);

}  // namespace wvlab::harness

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wvlab/harness/config.hpp"
#include "wvlab/harness/experiments.hpp"

namespace wvlab::harness {

struct CheckResult {
  int id = 0;
  std::string key;
  std::string name;
  bool pass = false;
  bool skipped = false;  // e.g. a rate fit with a single eps
  double measured = 0.0;
  std::string threshold;
  std::string detail;
};

/// Pass/fail limits. Defaults are the acceptance values.
struct Tolerances {
  double min_rate = 2.0 / 7.0;
  double max_runtime_s = 600.0;
  double e_slope = 1.0, e_slope_tol = 0.15;
  double r1_slope = 2.0, r1_slope_tol = 0.2;
  double husimi_slope = 1.0, husimi_slope_tol = 0.15;
  double step_mass = 1e-12, step_l2 = 1e-12, energy_rel = 1e-6;
  double positivity_rel = 1e-12;
  double hs_tol = 1e-6;
  double shift_tol = 1e-10;
  double seed_gap_slope = 0.9, seed_l2_slope = 0.9, seed_min_rel = 1e-12, seed_support_cells = 1.0;
  double oracle_max = 1e-5, oracle_ratio_lo = 3.5, oracle_ratio_hi = 4.5;
  double support_cells = 3.0;
  double error_shape_rate = 10.0;     // max d/dt log(1 + log(envelope ratio))
  double sobolev_growth_rate = 10.0;  // max d/dt log ||g||_{H^3}
};

/// Everything the checks read. Parts not needed by the selection stay empty.
struct Measurements {
  std::optional<ConvergenceResult> sweep;
  std::optional<OracleResult> oracle;
  std::vector<HsSample> hs;
  std::vector<ShiftSample> shifts;
};

/// Check keys in report order.
const std::vector<std::string>& check_keys();

/// Expands "all" and validates names; throws ConfigError on unknown keys.
std::vector<std::string> selected_checks(const RunConfig& cfg);

Measurements measure(const RunConfig& cfg);
std::vector<CheckResult> evaluate(const Measurements& m, const RunConfig& cfg, const Tolerances& tol = {});

/// measure + evaluate with the default tolerances.
std::vector<CheckResult> run_checks(const RunConfig& cfg);

bool all_pass(const std::vector<CheckResult>& results);

void emit_checks_csv(const std::vector<CheckResult>& results, const std::filesystem::path& path);
std::string format_check(const CheckResult& r);

}  // namespace wvlab::harness

#include "wvlab/harness/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "wvlab/fit.hpp"

namespace wvlab::harness {

namespace {

const std::vector<std::pair<std::string, std::string>>& catalogue() {
  static const std::vector<std::pair<std::string, std::string>> c = {
      {"convergence_rate", "L2 error rate in eps"},
      {"error_terms", "||E1+E2|| scales like eps"},
      {"residual_r1", "r1 scales like eps^2"},
      {"husimi_proximity", "||f~ - f|| scales like eps"},
      {"conservation", "mass / L2 / energy conservation"},
      {"positivity", "Husimi transform stays nonnegative"},
      {"hs_bridge", "Hilbert-Schmidt / L2 bridge"},
      {"moment_shift", "k second-moment shift d eps/2"},
      {"seed", "classical seed normalization and support"},
      {"oracle", "Schrodinger-picture oracle agreement"},
      {"support_bound", "Vlasov momentum support bound"},
      {"error_shape", "error envelope within a doubly-exponential majorant"},
      {"sobolev_growth", "log H3 norm of g grows at most linearly"},
  };
  return c;
}

const std::set<std::string> kSweepChecks = {"convergence_rate", "error_terms", "residual_r1",   "husimi_proximity",
                                            "conservation",     "positivity",  "seed",          "support_bound",
                                            "error_shape",      "sobolev_growth"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Rows of one eps block.
std::vector<const DiagnosticRow*> block(const RunRecord& rec, double eps) {
  std::vector<const DiagnosticRow*> out;
  for (const auto& r : rec.rows)
    if (r.eps == eps) out.push_back(&r);
  return out;
}

const DiagnosticRow* row_at(const RunRecord& rec, double eps, double t) {
  const DiagnosticRow* best = nullptr;
  for (const auto* r : block(rec, eps))
    if (!best || std::abs(r->t - t) < std::abs(best->t - t)) best = r;
  return best;
}

// Rate fit that reports instead of throwing.
struct Slope {
  bool ok = false;
  bool insufficient = false;
  double value = std::numeric_limits<double>::quiet_NaN();
  std::string why;
};

Slope slope_of(const std::vector<double>& eps, const std::vector<double>& y) {
  Slope s;
  if (eps.size() < 2) {
    s.insufficient = true;
    s.why = "insufficient points";
    return s;
  }
  for (double v : y) {
    if (!(v > 0.0)) {
      s.why = "non-positive value " + num(v);
      return s;
    }
  }
  s.value = fit_loglog(eps, y).slope;
  s.ok = true;
  return s;
}

CheckResult make(int id, const std::string& key) {
  CheckResult r;
  r.id = id;
  r.key = key;
  for (const auto& [k, n] : catalogue())
    if (k == key) r.name = n;
  return r;
}

void slope_check(CheckResult& r, const Slope& s, double lo, double hi) {
  r.measured = s.value;
  if (s.insufficient) {
    r.skipped = true;
    r.pass = true;
    r.detail = "insufficient points";
    return;
  }
  if (!s.ok) {
    r.pass = false;
    r.detail = s.why;
    return;
  }
  r.pass = s.value >= lo && s.value <= hi;
}

std::string series(const std::vector<double>& eps, const std::vector<double>& y) {
  std::string s;
  for (std::size_t i = 0; i < eps.size(); ++i) s += (i ? "; " : "") + ("eps=" + num(eps[i]) + ": " + num(y[i]));
  return s;
}

}  // namespace

const std::vector<std::string>& check_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [key, name] : catalogue()) k.push_back(key);
    return k;
  }();
  return keys;
}

std::vector<std::string> selected_checks(const RunConfig& cfg) {
  std::set<std::string> want;
  for (const auto& c : cfg.checks) {
    if (c == "all") {
      want.insert(check_keys().begin(), check_keys().end());
    } else if (std::find(check_keys().begin(), check_keys().end(), c) != check_keys().end()) {
      want.insert(c);
    } else {
      throw ConfigError("unknown check '" + c + "'");
    }
  }
  std::vector<std::string> out;
  for (const auto& k : check_keys())
    if (want.count(k)) out.push_back(k);
  return out;
}

Measurements measure(const RunConfig& cfg) {
  validate(cfg);
  const auto sel = selected_checks(cfg);
  auto has = [&](const std::string& k) { return std::find(sel.begin(), sel.end(), k) != sel.end(); };
  Measurements m;
  if (std::any_of(sel.begin(), sel.end(), [](const std::string& k) { return kSweepChecks.count(k) > 0; }))
    m.sweep = run_convergence(cfg);
  if (has("oracle")) m.oracle = run_oracle(cfg);
  if (has("hs_bridge")) m.hs = hs_suite(cfg);
  if (has("moment_shift")) m.shifts = moment_shift_suite(cfg);
  return m;
}

std::vector<CheckResult> evaluate(const Measurements& m, const RunConfig& cfg, const Tolerances& tol) {
  const auto sel = selected_checks(cfg);
  const double hk = 2.0 * cfg.lk / static_cast<double>(cfg.nk);
  std::vector<CheckResult> out;
  std::vector<double> eps;
  if (m.sweep)
    for (const auto& s : m.sweep->record.summary) eps.push_back(s.eps);

  auto need_sweep = [&](CheckResult& r) {
    if (m.sweep) return true;
    r.pass = false;
    r.detail = "sweep not measured";
    return false;
  };

  int id = 0;
  for (const auto& key : check_keys()) {
    ++id;
    if (std::find(sel.begin(), sel.end(), key) == sel.end()) continue;
    CheckResult r = make(id, key);

    if (key == "convergence_rate") {
      r.threshold = "slope >= " + num(tol.min_rate) + ", runtime <= " + num(tol.max_runtime_s) + " s";
      if (need_sweep(r)) {
        std::vector<double> err;
        for (const auto& s : m.sweep->record.summary) err.push_back(s.final_error);
        slope_check(r, slope_of(eps, err), tol.min_rate, std::numeric_limits<double>::infinity());
        const bool fast = m.sweep->wall_seconds <= tol.max_runtime_s;
        r.pass = r.pass && fast;
        r.detail += (r.detail.empty() ? "" : "; ") + series(eps, err) + "; runtime " + num(m.sweep->wall_seconds) + " s";
      }
    } else if (key == "error_terms" || key == "residual_r1") {
      const bool e = key == "error_terms";
      const double target = e ? tol.e_slope : tol.r1_slope;
      const double width = e ? tol.e_slope_tol : tol.r1_slope_tol;
      r.threshold = "slope " + num(target) + " +- " + num(width) + " at t = " + num(cfg.e_time);
      if (need_sweep(r)) {
        std::vector<double> y;
        for (double ep : eps) {
          const DiagnosticRow* row = row_at(m.sweep->record, ep, cfg.e_time);
          y.push_back(e ? row->e_norm : row->r1);
        }
        slope_check(r, slope_of(eps, y), target - width, target + width);
        r.detail += (r.detail.empty() ? "" : "; ") + series(eps, y);
      }
    } else if (key == "husimi_proximity") {
      r.threshold = "slope " + num(tol.husimi_slope) + " +- " + num(tol.husimi_slope_tol) + " at t = T";
      if (need_sweep(r)) {
        std::vector<double> y;
        for (double ep : eps) y.push_back(block(m.sweep->record, ep).back()->husimi_gap);
        slope_check(r, slope_of(eps, y), tol.husimi_slope - tol.husimi_slope_tol,
                    tol.husimi_slope + tol.husimi_slope_tol);
        r.detail += (r.detail.empty() ? "" : "; ") + series(eps, y);
      }
    } else if (key == "conservation") {
      r.threshold = "per-step mass <= " + num(tol.step_mass) + ", per-step L2 <= " + num(tol.step_l2) +
                    ", energy drift <= " + num(tol.energy_rel);
      if (need_sweep(r)) {
        double wm = 0.0, wl = 0.0, we = 0.0;
        std::string d;
        for (const auto& s : m.sweep->record.summary) {
          wm = std::max({wm, s.step_mass_f, s.step_mass_g});
          wl = std::max({wl, s.step_l2_f, s.step_l2_g});
          we = std::max({we, s.energy_drift_f, s.energy_drift_g});
          d += (d.empty() ? "" : "; ") + ("eps=" + num(s.eps) + ": wigner " + num(s.step_mass_f) + "/" +
                                          num(s.step_l2_f) + "/" + num(s.energy_drift_f) + ", vlasov " +
                                          num(s.step_mass_g) + "/" + num(s.step_l2_g) + "/" + num(s.energy_drift_g));
        }
        r.measured = we;
        r.pass = wm <= tol.step_mass && wl <= tol.step_l2 && we <= tol.energy_rel;
        r.detail = "worst mass " + num(wm) + ", L2 " + num(wl) + ", energy " + num(we) + " [" + d + "]";
      }
    } else if (key == "positivity") {
      r.threshold = "min f~ >= -" + num(tol.positivity_rel) + " max f~ at every sample";
      if (need_sweep(r)) {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& row : m.sweep->record.rows) worst = std::min(worst, row.husimi_min / row.husimi_max);
        r.measured = worst;
        r.pass = worst >= -tol.positivity_rel;
        r.detail = "worst min/max " + num(worst);
      }
    } else if (key == "hs_bridge") {
      r.threshold = "|ratio - 1| <= " + num(tol.hs_tol) + ", one ensemble with negative Wigner function";
      double worst = 0.0;
      bool negative = false;
      for (const auto& s : m.hs) {
        worst = std::max(worst, std::abs(s.bridge.ratio - 1.0));
        negative = negative || s.wigner_min < 0.0;
        r.detail += (r.detail.empty() ? "" : "; ") + (s.name + ": ratio-1 = " + num(s.bridge.ratio - 1.0) +
                                                     ", min W = " + num(s.wigner_min));
      }
      r.measured = worst;
      r.pass = m.hs.size() >= 3 && negative && worst <= tol.hs_tol;
    } else if (key == "moment_shift") {
      r.threshold = "|shift - d eps/2| <= " + num(tol.shift_tol);
      double worst = 0.0;
      for (const auto& s : m.shifts) {
        const double dev = std::abs(s.after - s.before - s.expected);
        worst = std::max(worst, dev);
        r.detail += (r.detail.empty() ? "" : "; ") + (s.field + " eps=" + num(s.eps) + ": " + num(dev));
      }
      r.measured = worst;
      r.pass = m.shifts.size() >= 6 && worst <= tol.shift_tol;
    } else if (key == "seed") {
      r.threshold = "gap slope >= " + num(tol.seed_gap_slope) + ", L2 slope >= " + num(tol.seed_l2_slope) +
                    ", min >= -" + num(tol.seed_min_rel) + " max, support <= M0 + hk";
      if (need_sweep(r)) {
        std::vector<double> gap, l2;
        double worst_min = 0.0, worst_support = 0.0;
        for (const auto& s : m.sweep->record.summary) {
          gap.push_back(s.seed_gap);
          l2.push_back(s.seed_l2);
          worst_min = std::min(worst_min, s.seed_min_rel);
          worst_support = std::max(worst_support, s.seed_support);
        }
        const Slope sg = slope_of(eps, gap), sl = slope_of(eps, l2);
        const bool local = worst_min >= -tol.seed_min_rel && worst_support <= cfg.m0 + tol.seed_support_cells * hk;
        r.measured = sl.value;
        if (sg.insufficient) {
          r.skipped = true;
          r.pass = local;
          r.detail = "insufficient points for the rate fits";
        } else {
          r.pass = sg.ok && sl.ok && sg.value >= tol.seed_gap_slope && sl.value >= tol.seed_l2_slope && local;
          r.detail = "gap slope " + num(sg.value) + ", L2 slope " + num(sl.value);
        }
        r.detail += "; min/max " + num(worst_min) + ", support " + num(worst_support) + "; gaps " + series(eps, gap) +
                    "; L2 " + series(eps, l2);
      }
    } else if (key == "oracle") {
      r.threshold = "discrepancy <= " + num(tol.oracle_max) + ", dt-halving ratio in [" + num(tol.oracle_ratio_lo) +
                    ", " + num(tol.oracle_ratio_hi) + "]";
      if (m.oracle) {
        const double ratio = m.oracle->ratio();
        r.measured = m.oracle->discrepancy;
        r.pass = m.oracle->discrepancy <= tol.oracle_max && ratio >= tol.oracle_ratio_lo && ratio <= tol.oracle_ratio_hi;
        r.detail = "dt=" + num(m.oracle->dt) + ": " + num(m.oracle->discrepancy) + ", dt/2: " +
                   num(m.oracle->discrepancy_half) + ", ratio " + num(ratio);
      } else {
        r.detail = "oracle not measured";
      }
    } else if (key == "support_bound") {
      r.threshold = "support <= M0 + |grad phi|_inf t + " + num(tol.support_cells) + " hk";
      if (need_sweep(r)) {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& row : m.sweep->record.rows) worst = std::max(worst, (row.support - row.support_bound) / hk);
        r.measured = worst;
        r.pass = worst <= tol.support_cells;
        r.detail = "worst (radius - bound)/hk = " + num(worst);
      }
    } else if (key == "error_shape") {
      r.threshold = "d/dt log(1 + log(env/env0)) <= " + num(tol.error_shape_rate);
      if (need_sweep(r)) {
        double worst = 0.0;
        bool finite = true;
        for (double ep : eps) {
          const auto rows = block(m.sweep->record, ep);
          const double e0 = rows.front()->error;
          if (!(e0 > 0.0)) {
            finite = false;
            continue;
          }
          double env = e0, prev_psi = 0.0, prev_t = rows.front()->t;
          for (std::size_t i = 1; i < rows.size(); ++i) {
            env = std::max(env, rows[i]->error);
            const double psi = std::log1p(std::log(env / e0));
            worst = std::max(worst, (psi - prev_psi) / (rows[i]->t - prev_t));
            prev_psi = psi;
            prev_t = rows[i]->t;
          }
        }
        r.measured = worst;
        r.pass = finite && worst <= tol.error_shape_rate;
        r.detail = finite ? "worst rate " + num(worst) : "zero initial error";
      }
    } else if (key == "sobolev_growth") {
      r.threshold = "d/dt log ||g||_H3 <= " + num(tol.sobolev_growth_rate);
      if (need_sweep(r)) {
        double worst = -std::numeric_limits<double>::infinity();
        for (double ep : eps) {
          const auto rows = block(m.sweep->record, ep);
          for (std::size_t i = 1; i < rows.size(); ++i)
            worst = std::max(worst, std::log(rows[i]->h3_g / rows[i - 1]->h3_g) / (rows[i]->t - rows[i - 1]->t));
        }
        r.measured = worst;
        r.pass = worst <= tol.sobolev_growth_rate;
        r.detail = "worst rate " + num(worst);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> run_checks(const RunConfig& cfg) { return evaluate(measure(cfg), cfg); }

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string format_check(const CheckResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%2d] %-4s ", r.id, r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL"));
  return std::string(head) + r.key + ": measured " + num(r.measured) + " (" + r.threshold + ") -- " + r.detail;
}

void emit_checks_csv(const std::vector<CheckResult>& results, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  out << "id,key,status,measured,threshold,detail\n";
  char buf[32];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%.17g", r.measured);
    out << r.id << ',' << r.key << ',' << (r.skipped ? "skip" : (r.pass ? "pass" : "fail")) << ',' << buf << ','
        << quote(r.threshold) << ',' << quote(r.detail) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace wvlab::harness

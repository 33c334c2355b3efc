// wvlab: Wigner/Vlasov semiclassical-limit laboratory.
#include <chrono>
#include <cstdio>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wvlab/harness/checks.hpp"
#include "wvlab/harness/config.hpp"
#include "wvlab/harness/experiments.hpp"
#include "wvlab/harness/record.hpp"
#include "wvlab/phase_space.hpp"

namespace fs = std::filesystem;
using namespace wvlab::harness;

namespace {

struct Options {
  std::string config;
  std::string out;
  bool quiet = false;
  double eps = -1.0;
};

RunConfig load(const Options& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
  if (!o.out.empty()) cfg.out = o.out;
  validate(cfg);
  fs::create_directories(cfg.out);
  return cfg;
}

// Timestamps live here so that the CSV files stay byte-deterministic.
void write_metadata(const RunConfig& cfg, const std::string& command, double wall) {
  std::ofstream m(fs::path(cfg.out) / "metadata.txt");
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[64];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  m << "# command: " << command << "\n# finished: " << stamp << "\n# wall_seconds: " << wall << "\n"
    << to_text(cfg);
}

void say(const Options& o, const std::string& s) {
  if (!o.quiet) std::cout << s << '\n';
}

int report(const Options& o, const RunConfig& cfg, const std::vector<CheckResult>& results,
           const std::string& file) {
  emit_checks_csv(results, fs::path(cfg.out) / file);
  for (const auto& r : results) say(o, format_check(r));
  const bool ok = all_pass(results);
  say(o, ok ? "all executed checks passed" : "some checks FAILED");
  return ok ? 0 : 1;
}

int cmd_evolve(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = load(o);
  const double eps = o.eps > 0.0 ? o.eps : cfg.eps.front();
  cfg.eps = {eps};
  check_resolution(cfg);
  const EntryResult r = run_entry(cfg, eps, true);
  const fs::path out(cfg.out);
  emit_csv(RunRecord{r.rows, {r.summary}}, out / "rows.csv");
  emit_summary_csv(RunRecord{{}, {r.summary}}, out / "summary.csv");
  wvlab::dump(r.f0, out / "f0.wvf");
  wvlab::dump(r.g0, out / "g0.wvf");
  wvlab::dump(r.f_final, out / "f_final.wvf");
  wvlab::dump(r.g_final, out / "g_final.wvf");
  say(o, "eps " + std::to_string(eps) + ": final L2 error " + std::to_string(r.summary.final_error));
  write_metadata(cfg, "evolve", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return 0;
}

int cmd_converge(const Options& o) {
  RunConfig cfg = load(o);
  Measurements m;
  m.sweep = run_convergence(cfg);
  const fs::path out(cfg.out);
  emit_csv(m.sweep->record, out / "rows.csv");
  emit_summary_csv(m.sweep->record, out / "summary.csv");
  {
    std::ofstream fit(out / "fit.csv");
    fit << "eps,final_error,residual\n";
    char buf[96];
    for (std::size_t i = 0; i < cfg.eps.size(); ++i) {
      const double res = m.sweep->fitted ? m.sweep->fit.residuals[i] : 0.0;
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", cfg.eps[i], m.sweep->record.summary[i].final_error, res);
      fit << buf;
    }
    if (m.sweep->fitted) {
      std::snprintf(buf, sizeof buf, "# slope %.17g intercept %.17g\n", m.sweep->fit.slope, m.sweep->fit.intercept);
      fit << buf;
    }
  }
  write_metadata(cfg, "converge", m.sweep->wall_seconds);
  RunConfig sel = cfg;
  sel.checks = {"convergence_rate"};
  return report(o, sel, evaluate(m, sel), "checks.csv");
}

int cmd_checks(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = load(o);
  const Measurements m = measure(cfg);
  if (m.sweep) {
    emit_csv(m.sweep->record, fs::path(cfg.out) / "rows.csv");
    emit_summary_csv(m.sweep->record, fs::path(cfg.out) / "summary.csv");
  }
  const int rc = report(o, cfg, evaluate(m, cfg), "checks.csv");
  write_metadata(cfg, "checks", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return rc;
}

int cmd_seed_check(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = load(o);
  Measurements m;
  m.sweep.emplace();
  m.sweep->record.summary = seed_sweep(cfg);
  emit_summary_csv(m.sweep->record, fs::path(cfg.out) / "seed.csv");
  for (const auto& s : m.sweep->record.summary) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "eps %-8g |1-N| %.3e  tail %.3e  ||f0-g0|| %.3e  min/max %.2e  support %.4g",
                  s.eps, s.seed_gap, s.seed_tail, s.seed_l2, s.seed_min_rel, s.seed_support);
    say(o, buf);
  }
  cfg.checks = {"seed"};
  const int rc = report(o, cfg, evaluate(m, cfg), "seed_checks.csv");
  write_metadata(cfg, "seed-check", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner-Hartree vs Vlasov semiclassical-limit laboratory"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "key = value config file")->check(CLI::ExistingFile);
  app.add_option("--out", o.out, "output directory (overrides the config)");
  app.add_flag("--quiet", o.quiet, "suppress the console report");

  auto* evolve = app.add_subcommand("evolve", "single-eps run; dumps fields and diagnostics");
  evolve->add_option("--eps", o.eps, "eps to run (default: first of the config list)");
  auto* converge = app.add_subcommand("converge", "eps sweep and log-log rate fit");
  auto* checks = app.add_subcommand("checks", "run the invariant suite");
  auto* seed = app.add_subcommand("seed-check", "classical seed report");
  for (auto* sub : {evolve, converge, checks, seed}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (*evolve) return cmd_evolve(o);
    if (*converge) return cmd_converge(o);
    if (*checks) return cmd_checks(o);
    return cmd_seed_check(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

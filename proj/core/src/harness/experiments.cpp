#include "wvlab/harness/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>

#include "wvlab/husimi.hpp"
#include "wvlab/initial_data.hpp"
#include "wvlab/phase_space.hpp"
#include "wvlab/vlasov.hpp"
#include "wvlab/wigner.hpp"

namespace wvlab::harness {

namespace {

struct StepTracker {
  double mass = 0.0, l2 = 0.0, energy0 = 0.0;
  double worst_mass = 0.0, worst_l2 = 0.0, worst_energy = 0.0;

  void start(const PhaseField& f, const Potential& phi) {
    mass = integrate(f);
    l2 = l2_norm(f);
    energy0 = energy(f, phi);
  }
  void update(const PhaseField& f, const Potential& phi) {
    const double m = integrate(f), n = l2_norm(f), e = energy(f, phi);
    worst_mass = std::max(worst_mass, std::abs(m - mass));
    worst_l2 = std::max(worst_l2, std::abs(n - l2) / l2);
    worst_energy = std::max(worst_energy, std::abs(e - energy0) / std::abs(energy0));
    mass = m;
    l2 = n;
  }
};

DiagnosticRow diagnose(const PhaseField& f, const PhaseField& g, const Potential& phi, double m0) {
  DiagnosticRow r;
  r.eps = f.epsilon();
  r.t = f.time();
  r.mass_f = integrate(f);
  r.l2_f = l2_norm(f);
  r.energy_f = energy(f, phi);
  r.mass_g = integrate(g);
  r.l2_g = l2_norm(g);
  r.energy_g = energy(g, phi);
  const PhaseField fh = husimi_transform(f);
  r.husimi_min = min_value(fh);
  r.husimi_max = max_value(fh);
  r.error = l2_norm(f - g);
  r.husimi_gap = l2_norm(fh - f);
  r.e_norm = l2_norm(error_E1(fh) + error_E2(f, phi));
  r.r1 = residual_r1(g, fh, phi, f.epsilon());
  r.support = support_radius(g);
  r.support_bound = support_bound(g.time(), m0, phi);
  r.h3_g = sobolev_norm(g, 3);
  return r;
}

}  // namespace

EntryResult run_entry(const RunConfig& cfg, double eps, bool keep_fields) {
  const auto start = std::chrono::steady_clock::now();
  const PhaseGrid grid = cfg.grid();
  const Potential phi = cfg.phi();
  const ClassicalProfile profile = default_profile(cfg.m0, cfg.d, cfg.sigma_x);

  EntryResult out;
  EpsSummary& s = out.summary;
  s.eps = eps;

  PhaseField f0 = coherent_mixture(profile, grid, eps);
  const SeedReport seed = classical_seed(f0, cfg.m0);
  s.seed_gap = seed.gap;
  s.seed_tail = seed.tail;
  s.seed_l2 = seed.l2_distance;
  s.seed_min_rel = seed.min_value / max_value(seed.g0);
  s.seed_support = seed.support_radius;
  s.seed_h3 = seed.h3_norm;
  s.f0_l1 = l1_norm(f0);
  s.f0_h3 = sobolev_norm(f0, 3);
  s.f0_boundary_mass = boundary_mass(f0);

  PhaseField g0 = cfg.datum == "seed" ? seed.g0 : profile.sample(grid);
  if (keep_fields) {
    out.f0 = f0;
    out.g0 = g0;
  }

  WignerRun wr(std::move(f0), phi, cfg.dt);
  VlasovRun vr(std::move(g0), phi, cfg.dt, cfg.m0);
  StepTracker tf, tg;
  tf.start(wr.state(), phi);
  tg.start(vr.state(), phi);
  out.rows.push_back(diagnose(wr.state(), vr.state(), phi, cfg.m0));

  const long steps = cfg.steps();
  for (long n = 1; n <= steps; ++n) {
    wr.step();
    vr.step();
    tf.update(wr.state(), phi);
    tg.update(vr.state(), phi);
    if (n % cfg.cadence == 0 || n == steps) out.rows.push_back(diagnose(wr.state(), vr.state(), phi, cfg.m0));
  }

  s.final_error = out.rows.back().error;
  s.step_mass_f = tf.worst_mass;
  s.step_l2_f = tf.worst_l2;
  s.energy_drift_f = tf.worst_energy;
  s.step_mass_g = tg.worst_mass;
  s.step_l2_g = tg.worst_l2;
  s.energy_drift_g = tg.worst_energy;
  if (keep_fields) {
    out.f_final = wr.state();
    out.g_final = vr.state();
  }
  s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ConvergenceResult run_convergence(const RunConfig& cfg) {
  validate(cfg);
  check_resolution(cfg);
  const auto start = std::chrono::steady_clock::now();
  std::vector<EntryResult> results(cfg.eps.size());
  const auto width = static_cast<std::size_t>(cfg.threads);
  for (std::size_t lo = 0; lo < cfg.eps.size(); lo += width) {
    const std::size_t hi = std::min(cfg.eps.size(), lo + width);
    std::vector<std::future<EntryResult>> jobs;
    for (std::size_t i = lo; i < hi; ++i) {
      if (width == 1) {
        results[i] = run_entry(cfg, cfg.eps[i]);
      } else {
        jobs.push_back(std::async(std::launch::async, [&cfg, i] { return run_entry(cfg, cfg.eps[i]); }));
      }
    }
    for (std::size_t j = 0; j < jobs.size(); ++j) results[lo + j] = jobs[j].get();
  }

  ConvergenceResult c;
  std::vector<double> errors;
  for (auto& r : results) {
    c.record.rows.insert(c.record.rows.end(), r.rows.begin(), r.rows.end());
    c.record.summary.push_back(r.summary);
    errors.push_back(r.summary.final_error);
  }
  if (cfg.eps.size() >= 2) {
    c.fit = fit_loglog(cfg.eps, errors);
    c.fitted = true;
  }
  c.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::vector<EpsSummary> seed_sweep(const RunConfig& cfg) {
  validate(cfg);
  const PhaseGrid grid = cfg.grid();
  const ClassicalProfile profile = default_profile(cfg.m0, cfg.d, cfg.sigma_x);
  std::vector<EpsSummary> out;
  for (double eps : cfg.eps) {
    EpsSummary s;
    s.eps = eps;
    const PhaseField f0 = coherent_mixture(profile, grid, eps);
    const SeedReport seed = classical_seed(f0, cfg.m0);
    s.seed_gap = seed.gap;
    s.seed_tail = seed.tail;
    s.seed_l2 = seed.l2_distance;
    s.seed_min_rel = seed.min_value / max_value(seed.g0);
    s.seed_support = seed.support_radius;
    s.seed_h3 = seed.h3_norm;
    s.f0_l1 = l1_norm(f0);
    s.f0_h3 = sobolev_norm(f0, 3);
    s.f0_boundary_mass = boundary_mass(f0);
    out.push_back(s);
  }
  return out;
}

OrbitalEnsemble benchmark_ensemble(const PhaseGrid& grid, double eps) {
  OrbitalEnsemble e{grid, eps, {}, {}};
  const double xs[3] = {-1.0, 0.5, 1.2}, ks[3] = {0.4, -0.3, 0.1}, ws[3] = {0.5, 0.3, 0.2};
  const auto d = static_cast<std::size_t>(grid.dim());
  for (int i = 0; i < 3; ++i) {
    std::vector<double> x0(d, 0.0), k0(d, 0.0);
    x0[0] = xs[i];
    k0[0] = ks[i];
    e.orbitals.push_back(coherent_state(grid, eps, x0, k0));
    e.weights.push_back(ws[i]);
  }
  return e;
}

OracleResult run_oracle(const RunConfig& cfg) {
  const PhaseGrid grid = make_grid(cfg.d, cfg.oracle_n, cfg.oracle_n, cfg.lx, cfg.lk);
  const Potential phi = cfg.phi();
  const OrbitalEnsemble ens = benchmark_ensemble(grid, cfg.oracle_eps);
  const PhaseField f0 = wigner_of_ensemble(ens);
  OracleResult r;
  r.eps = cfg.oracle_eps;
  r.dt = cfg.dt;
  r.discrepancy = oracle_compare(ens, f0, phi, cfg.oracle_t, cfg.dt);
  r.discrepancy_half = oracle_compare(ens, f0, phi, cfg.oracle_t, 0.5 * cfg.dt);
  return r;
}

std::vector<HsSample> hs_suite(const RunConfig& cfg) {
  const PhaseGrid grid = make_grid(cfg.d, cfg.oracle_n, cfg.oracle_n, cfg.lx, cfg.lk);
  const double eps = cfg.oracle_eps;
  const auto d = static_cast<std::size_t>(cfg.d);
  const std::vector<double> zero(d, 0.0);
  std::vector<double> x0(d, 0.0), k0(d, 0.0);
  x0[0] = 0.5;
  k0[0] = -0.25;
  const auto ground = coherent_state(grid, eps, zero, zero);
  const auto excited = excited_state(grid, eps);

  std::vector<std::pair<std::string, OrbitalEnsemble>> cases;
  cases.emplace_back("coherent", OrbitalEnsemble{grid, eps, {coherent_state(grid, eps, x0, k0)}, {1.0}});
  cases.emplace_back("ground+excited", OrbitalEnsemble{grid, eps, {ground, excited}, {0.5, 0.5}});
  cases.emplace_back("excited", OrbitalEnsemble{grid, eps, {excited}, {1.0}});
  cases.emplace_back("benchmark", benchmark_ensemble(grid, eps));

  std::vector<HsSample> out;
  for (auto& [name, ens] : cases) {
    HsSample s;
    s.name = name;
    s.bridge = hs_bridge(ens);
    s.wigner_min = min_value(wigner_of_ensemble(ens));
    out.push_back(s);
  }
  return out;
}

std::vector<ShiftSample> moment_shift_suite(const RunConfig& cfg) {
  const PhaseGrid grid = cfg.grid();
  const PhaseGrid ogrid = make_grid(cfg.d, cfg.oracle_n, cfg.oracle_n, cfg.lx, cfg.lk);
  const ClassicalProfile profile = default_profile(cfg.m0, cfg.d, cfg.sigma_x);
  std::vector<ShiftSample> out;
  for (double eps : {0.1, 0.05}) {
    std::vector<std::pair<std::string, PhaseField>> fields;
    fields.emplace_back("coherent_mixture", coherent_mixture(profile, grid, eps));
    PhaseField g = profile.sample(grid);
    g.set_epsilon(eps);
    fields.emplace_back("profile", std::move(g));
    fields.emplace_back("benchmark_wigner", wigner_of_ensemble(benchmark_ensemble(ogrid, eps)));
    for (auto& [name, f] : fields) {
      ShiftSample s;
      s.field = name;
      s.eps = eps;
      std::tie(s.before, s.after) = second_moment_shift(f);
      s.expected = 0.5 * cfg.d * eps;
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace wvlab::harness

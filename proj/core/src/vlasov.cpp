#include "wvlab/vlasov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wvlab/phase_space.hpp"
#include "wvlab/wigner.hpp"

namespace wvlab {

PhaseField classical_kick(const PhaseField& g, const SpatialField& v, double dt) {
  SplitStepKernels k(g.grid());
  PhaseField out = g;
  k.classical_kick(out, spectral_gradient(v), dt);
  return out;
}

VlasovRun::VlasovRun(PhaseField state, Potential phi, double dt, double m0)
    : state_(std::move(state)),
      phi_(std::move(phi)),
      dt_(dt),
      m0_(m0),
      kernels_(std::make_unique<SplitStepKernels>(state_.grid())) {
  if (state_.epsilon() != 0.0) throw std::invalid_argument("VlasovRun: state must be classical (epsilon = 0)");
  if (!(dt_ > 0.0)) throw std::invalid_argument("VlasovRun: dt must be positive");
  if (!(m0_ > 0.0)) throw std::invalid_argument("VlasovRun: M0 must be positive");
  if (phi_.dim() != state_.grid().dim()) throw std::invalid_argument("VlasovRun: potential dimension mismatch");
}

void VlasovRun::step() { step(dt_); }

void VlasovRun::step(double dt) {
  auto h = hartree_field(kernels_->density(state_), phi_);
  kernels_->classical_kick(state_, h.gradient, 0.5 * dt);
  kernels_->free_transport(state_, dt);
  h = hartree_field(kernels_->density(state_), phi_);
  kernels_->classical_kick(state_, h.gradient, 0.5 * dt);
  state_.set_time(state_.time() + dt);
  if (!state_.all_finite())
    throw NumericalBlowup("VlasovRun: non-finite values at t = " + std::to_string(state_.time()));
}

void VlasovRun::advance_to(double t_end) {
  const auto n = static_cast<long>(std::llround((t_end - state_.time()) / dt_));
  for (long i = 0; i < n; ++i) step();
}

VlasovRun& vlasov_step(VlasovRun& run) {
  run.step();
  return run;
}

namespace {

// Lattice points of stride s (on every axis) where g0 is significant.
std::vector<std::size_t> lattice_points(const PhaseField& g0, std::size_t s, double cut) {
  const PhaseGrid& g = g0.grid();
  const int d = g.dim();
  std::vector<std::size_t> out;
  for (std::size_t ix = 0; ix < g.x_points(); ++ix) {
    bool on = true;
    for (int a = 0; a < d; ++a) on = on && axis_index(ix, a, d, g.nx()) % s == 0;
    if (!on) continue;
    for (std::size_t ik = 0; ik < g.k_points(); ++ik) {
      bool kon = true;
      for (int a = 0; a < d; ++a) kon = kon && axis_index(ik, a, d, g.nk()) % s == 0;
      if (kon && g0.at(ix, ik) > cut) out.push_back(ix * g.k_points() + ik);
    }
  }
  return out;
}

void pair_forces(const ParticleCloud& c, const std::vector<double>& x, const Potential& phi,
                 std::vector<double>& force) {
  const int d = c.d;
  const std::size_t n = c.size();
  const auto du = static_cast<std::size_t>(d);
  std::fill(force.begin(), force.end(), 0.0);
  std::vector<double> r(du);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t a = 0; a < du; ++a) r[a] = x[i * du + a] - x[j * du + a];
      for (int a = 0; a < d; ++a) {
        // grad phi is odd: the pair contributes equal and opposite forces.
        const double gphi = phi.gradient(r, a);
        force[i * du + static_cast<std::size_t>(a)] -= c.weight[j] * gphi;
        force[j * du + static_cast<std::size_t>(a)] += c.weight[i] * gphi;
      }
    }
  }
}

// Weight of grid node i in the trigonometric interpolant at offset
// delta = (z - z_i)/h, n nodes, Nyquist mode taken as its cosine.
double trig_weight(double delta, std::size_t n) {
  const double nn = static_cast<double>(n);
  const double theta = 2.0 * std::numbers::pi * delta / nn;
  const double half = 0.5 * theta;
  const double sh = std::sin(half);
  const double big_m = nn / 2.0 - 1.0;
  double sum;
  if (std::abs(sh) < 1e-14) {
    sum = big_m;
  } else {
    sum = std::sin(big_m * half) * std::cos((big_m + 1.0) * half) / sh;
  }
  return (1.0 + 2.0 * sum + std::cos(std::numbers::pi * delta)) / nn;
}

}  // namespace

ParticleCloud characteristics_oracle(const PhaseField& g0, const Potential& phi, double t,
                                     std::size_t n_particles, double dt) {
  if (n_particles < 1000) throw std::invalid_argument("characteristics_oracle: need at least 1000 particles");
  if (!(dt > 0.0) || !(t >= 0.0)) throw std::invalid_argument("characteristics_oracle: need dt > 0, t >= 0");
  const PhaseGrid& g = g0.grid();
  const int d = g.dim();
  const double cut = 1e-12 * max_value(g0);

  std::size_t stride = std::min(g.nx(), g.nk());
  std::vector<std::size_t> pts;
  for (; stride >= 1; stride /= 2) {
    pts = lattice_points(g0, stride, cut);
    if (pts.size() >= n_particles) break;
    if (stride == 1) break;
  }
  if (pts.size() < n_particles)
    throw std::invalid_argument("characteristics_oracle: support holds only " + std::to_string(pts.size()) +
                                " grid points");

  ParticleCloud c;
  c.d = d;
  const double s = static_cast<double>(stride);
  c.cell = std::pow(s * g.hx(), d) * std::pow(s * g.hk(), d);
  for (std::size_t p : pts) {
    const std::size_t ix = p / g.k_points(), ik = p % g.k_points();
    for (int a = 0; a < d; ++a) c.x.push_back(g.x_coord(ix, a));
    for (int a = 0; a < d; ++a) c.k.push_back(g.k_coord(ik, a));
    c.value.push_back(g0[p]);
    c.weight.push_back(g0[p] * c.cell);
  }

  const std::size_t m = c.x.size();
  std::vector<double> f1(m), f2(m), f3(m), f4(m), xs(m);
  std::vector<double> k1(m), k2(m), k3(m);
  const auto steps = static_cast<long>(std::llround(t / dt));
  for (long st = 0; st < steps; ++st) {
    // y' = (k, F(x)); RK4 on the pair.
    pair_forces(c, c.x, phi, f1);
    for (std::size_t i = 0; i < m; ++i) xs[i] = c.x[i] + 0.5 * dt * c.k[i];
    for (std::size_t i = 0; i < m; ++i) k1[i] = c.k[i] + 0.5 * dt * f1[i];
    pair_forces(c, xs, phi, f2);
    for (std::size_t i = 0; i < m; ++i) xs[i] = c.x[i] + 0.5 * dt * k1[i];
    for (std::size_t i = 0; i < m; ++i) k2[i] = c.k[i] + 0.5 * dt * f2[i];
    pair_forces(c, xs, phi, f3);
    for (std::size_t i = 0; i < m; ++i) xs[i] = c.x[i] + dt * k2[i];
    for (std::size_t i = 0; i < m; ++i) k3[i] = c.k[i] + dt * f3[i];
    pair_forces(c, xs, phi, f4);
    for (std::size_t i = 0; i < m; ++i) {
      c.x[i] += dt / 6.0 * (c.k[i] + 2.0 * k1[i] + 2.0 * k2[i] + k3[i]);
      c.k[i] += dt / 6.0 * (f1[i] + 2.0 * f2[i] + 2.0 * f3[i] + f4[i]);
    }
  }
  c.time = static_cast<double>(steps) * dt;
  return c;
}

double cloud_energy(const ParticleCloud& c, const Potential& phi) {
  const auto du = static_cast<std::size_t>(c.d);
  const std::size_t n = c.size();
  double kin = 0.0, pot = 0.0;
  std::vector<double> r(du);
  for (std::size_t i = 0; i < n; ++i) {
    double k2 = 0.0;
    for (std::size_t a = 0; a < du; ++a) k2 += c.k[i * du + a] * c.k[i * du + a];
    kin += 0.5 * c.weight[i] * k2;
    pot += 0.5 * c.weight[i] * c.weight[i] * phi.value(0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t a = 0; a < du; ++a) r[a] = c.x[i * du + a] - c.x[j * du + a];
      pot += c.weight[i] * c.weight[j] * phi.value(r);
    }
  }
  return kin + pot;
}

double interpolate(const PhaseField& f, const double* x, const double* k) {
  const PhaseGrid& g = f.grid();
  const int d = g.dim();
  std::vector<std::vector<double>> wx(static_cast<std::size_t>(d)), wk(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    auto& vx = wx[static_cast<std::size_t>(a)];
    auto& vk = wk[static_cast<std::size_t>(a)];
    vx.resize(g.nx());
    vk.resize(g.nk());
    for (std::size_t i = 0; i < g.nx(); ++i) vx[i] = trig_weight((x[a] - g.x_axis(i)) / g.hx(), g.nx());
    for (std::size_t j = 0; j < g.nk(); ++j) vk[j] = trig_weight((k[a] - g.k_axis(j)) / g.hk(), g.nk());
  }
  std::vector<double> kw(g.k_points());
  for (std::size_t ik = 0; ik < g.k_points(); ++ik) {
    double w = 1.0;
    for (int a = 0; a < d; ++a) w *= wk[static_cast<std::size_t>(a)][axis_index(ik, a, d, g.nk())];
    kw[ik] = w;
  }
  double sum = 0.0;
  for (std::size_t ix = 0; ix < g.x_points(); ++ix) {
    double w = 1.0;
    for (int a = 0; a < d; ++a) w *= wx[static_cast<std::size_t>(a)][axis_index(ix, a, d, g.nx())];
    if (w == 0.0) continue;
    double row = 0.0;
    for (std::size_t ik = 0; ik < g.k_points(); ++ik) row += f.at(ix, ik) * kw[ik];
    sum += w * row;
  }
  return sum;
}

double cloud_discrepancy(const ParticleCloud& c, const PhaseField& g) {
  if (c.d != g.grid().dim()) throw std::invalid_argument("cloud_discrepancy: dimension mismatch");
  const auto du = static_cast<std::size_t>(c.d);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double v = interpolate(g, c.x.data() + i * du, c.k.data() + i * du);
    num += (v - c.value[i]) * (v - c.value[i]);
    den += c.value[i] * c.value[i];
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

double support_radius(const PhaseField& g, double threshold) {
  const PhaseGrid& grid = g.grid();
  const double cut = threshold < 0.0 ? 1e-9 * max_abs(g) : threshold;
  std::vector<double> kr(grid.k_points());
  for (std::size_t j = 0; j < grid.k_points(); ++j) kr[j] = std::sqrt(grid.k_norm2(j));
  double r = 0.0;
  for (std::size_t ix = 0; ix < grid.x_points(); ++ix)
    for (std::size_t ik = 0; ik < grid.k_points(); ++ik)
      if (std::abs(g.at(ix, ik)) > cut) r = std::max(r, kr[ik]);
  return r;
}

double support_bound(double t, double m0, const Potential& phi) { return m0 + phi.grad_sup() * t; }

double residual_r1(const PhaseField& g, const PhaseField& f_husimi, const Potential& phi, double eps) {
  if (g.grid() != f_husimi.grid()) throw std::invalid_argument("residual_r1: grid mismatch");
  SplitStepKernels ker(g.grid());
  const SpatialField v = hartree_field(ker.density(f_husimi), phi).potential;
  return l2_norm(ker.apply_t_difference(g, v, eps));
}

}  // namespace wvlab

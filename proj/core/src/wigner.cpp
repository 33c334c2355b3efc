#include "wvlab/wigner.hpp"

#include <cmath>
#include <stdexcept>

#include "wvlab/phase_space.hpp"

namespace wvlab {

SpatialField density(const PhaseField& f) {
  const PhaseGrid& g = f.grid();
  SpatialField rho(g);
  const std::size_t nk = g.k_points();
  for (std::size_t i = 0; i < g.x_points(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < nk; ++j) s += f.at(i, j);
    rho[i] = s * g.k_cell();
  }
  return rho;
}

PhaseField apply_kick(const PhaseField& f, const SpatialField& v, double dt) {
  SplitStepKernels k(f.grid());
  PhaseField out = f;
  if (f.epsilon() > 0.0) {
    k.quantum_kick(out, v, f.epsilon(), dt);
  } else {
    k.classical_kick(out, spectral_gradient(v), dt);
  }
  return out;
}

PhaseField apply_free_transport(const PhaseField& f, double dt) {
  SplitStepKernels k(f.grid());
  PhaseField out = f;
  k.free_transport(out, dt);
  return out;
}

PhaseField apply_t_eps(const PhaseField& f, const SpatialField& v) {
  SplitStepKernels k(f.grid());
  return k.apply_t_eps(f, v, f.epsilon());
}

PhaseField apply_t_0(const PhaseField& g, const SpatialField& v) {
  SplitStepKernels k(g.grid());
  return k.apply_t_0(g, spectral_gradient(v));
}

double energy(const PhaseField& f, const Potential& phi) {
  const SpatialField rho = density(f);
  const HartreeField h = hartree_field(rho, phi);
  double pot = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) pot += rho[i] * h.potential[i];
  pot *= f.grid().x_cell();
  return 0.5 * k_second_moment(f) + 0.5 * pot;
}

WignerRun::WignerRun(PhaseField state, Potential phi, double dt)
    : state_(std::move(state)),
      phi_(std::move(phi)),
      dt_(dt),
      kernels_(std::make_unique<SplitStepKernels>(state_.grid())) {
  if (!(state_.epsilon() > 0.0)) throw std::invalid_argument("WignerRun: state epsilon must be positive");
  if (!(dt_ > 0.0)) throw std::invalid_argument("WignerRun: dt must be positive");
  if (phi_.dim() != state_.grid().dim()) throw std::invalid_argument("WignerRun: potential dimension mismatch");
}

void WignerRun::step() { step(dt_); }

void WignerRun::step(double dt) {
  const double eps = state_.epsilon();
  auto v = hartree_field(kernels_->density(state_), phi_).potential;
  kernels_->quantum_kick(state_, v, eps, 0.5 * dt);
  kernels_->free_transport(state_, dt);
  v = hartree_field(kernels_->density(state_), phi_).potential;
  kernels_->quantum_kick(state_, v, eps, 0.5 * dt);
  state_.set_time(state_.time() + dt);
  if (!state_.all_finite())
    throw NumericalBlowup("WignerRun: non-finite values at t = " + std::to_string(state_.time()));
}

void WignerRun::advance_to(double t_end) {
  const auto n = static_cast<long>(std::llround((t_end - state_.time()) / dt_));
  for (long i = 0; i < n; ++i) step();
}

WignerRun& step(WignerRun& run) {
  run.step();
  return run;
}

}  // namespace wvlab

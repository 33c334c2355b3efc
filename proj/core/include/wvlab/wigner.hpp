#pragma once

#include <memory>

#include "wvlab/field.hpp"
#include "wvlab/kernels.hpp"
#include "wvlab/potential.hpp"

namespace wvlab {

/// Raised when a solver state stops being finite.
class NumericalBlowup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// k-marginal of a phase-space field.
SpatialField density(const PhaseField& f);

/// exp(dt T_eps) with V frozen. Routed to the classical kick when
/// f.epsilon() == 0.
PhaseField apply_kick(const PhaseField& f, const SpatialField& v, double dt);
PhaseField apply_free_transport(const PhaseField& f, double dt);

/// Nonlinear-term generators. apply_t_eps requires f.epsilon() > 0.
PhaseField apply_t_eps(const PhaseField& f, const SpatialField& v);
PhaseField apply_t_0(const PhaseField& g, const SpatialField& v);

/// \int |k|^2/2 f + 1/2 \int rho (phi * rho).
double energy(const PhaseField& f, const Potential& phi);

/// Nonlinear Wigner-Hartree evolution by Strang splitting:
/// kick(dt/2) . transport(dt) . kick(dt/2), the Hartree potential rebuilt
/// from the density before each kick. The kick leaves the density unchanged,
/// so freezing V inside it is exact.
class WignerRun {
 public:
  WignerRun(PhaseField state, Potential phi, double dt);

  const PhaseField& state() const { return state_; }
  const Potential& potential() const { return phi_; }
  double dt() const { return dt_; }
  double time() const { return state_.time(); }
  double epsilon() const { return state_.epsilon(); }

  /// Advance one step (dt may be negative for reversal checks).
  void step();
  void step(double dt);
  void advance_to(double t_end);

  SplitStepKernels& kernels() { return *kernels_; }

 private:
  PhaseField state_;
  Potential phi_;
  double dt_;
  std::unique_ptr<SplitStepKernels> kernels_;
};

/// Free-function form of WignerRun::step.
WignerRun& step(WignerRun& run);

}  // namespace wvlab

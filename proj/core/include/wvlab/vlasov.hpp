#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "wvlab/field.hpp"
#include "wvlab/kernels.hpp"
#include "wvlab/potential.hpp"

namespace wvlab {

/// g(x,k) -> g(x, k + dt grad V(x)): every phase-space point is pushed by
/// the force -grad V over dt. Exact per x-column; mass, L2 and density are
/// unchanged.
PhaseField classical_kick(const PhaseField& g, const SpatialField& v, double dt);

/// Classical Vlasov evolution with the same splitting as WignerRun but the
/// classical kick in place of the quantum one.
class VlasovRun {
 public:
  VlasovRun(PhaseField state, Potential phi, double dt, double m0);

  const PhaseField& state() const { return state_; }
  const Potential& potential() const { return phi_; }
  double dt() const { return dt_; }
  double time() const { return state_.time(); }
  double m0() const { return m0_; }

  void step();
  void step(double dt);
  void advance_to(double t_end);

  SplitStepKernels& kernels() { return *kernels_; }

 private:
  PhaseField state_;
  Potential phi_;
  double dt_;
  double m0_;
  std::unique_ptr<SplitStepKernels> kernels_;
};

VlasovRun& vlasov_step(VlasovRun& run);

/// Weighted characteristics. Each particle carries the phase-space volume
/// `cell` of the lattice it was seeded on and the value g0 had there; by
/// Liouville, g(t) at the pushed point equals that value.
struct ParticleCloud {
  int d = 1;
  double cell = 0.0;
  double time = 0.0;
  std::vector<double> x, k;  // n * d each
  std::vector<double> weight;  // g0 * cell
  std::vector<double> value;   // g0 at the seed point

  std::size_t size() const { return weight.size(); }
};

/// Seeds particles on the coarsest uniform sub-lattice of the grid that still
/// holds at least `n_particles` points where g0 exceeds 1e-12 max g0, then
/// integrates the characteristics to time t with classical RK4 at step dt.
/// The force is the exact pairwise sum -sum_j w_j grad phi(x_i - x_j), so the
/// oracle shares no discretization with the grid solver.
/// Throws std::invalid_argument if n_particles < 1000 or the support is too
/// small to supply them.
ParticleCloud characteristics_oracle(const PhaseField& g0, const Potential& phi, double t,
                                     std::size_t n_particles, double dt);

/// sum w |k|^2/2 + 1/2 sum_ij w_i w_j phi(x_i - x_j).
double cloud_energy(const ParticleCloud& cloud, const Potential& phi);

/// Relative L2 mismatch between g and the transported values carried by the
/// cloud, with g evaluated at the particle positions by trigonometric
/// interpolation.
double cloud_discrepancy(const ParticleCloud& cloud, const PhaseField& g);

/// Band-limited interpolant of f at an arbitrary phase-space point.
double interpolate(const PhaseField& f, const double* x, const double* k);

/// Largest |k| over grid points with |g| > threshold. A negative threshold
/// selects the default 1e-9 max|g|. Returns 0 when no point qualifies.
double support_radius(const PhaseField& g, double threshold = -1.0);
/// M0 + ||grad phi||_inf t.
double support_bound(double t, double m0, const Potential& phi);

/// ||(T_eps - T_0) g||_L2 with both generators built on V = phi * rho of
/// f_husimi.
double residual_r1(const PhaseField& g, const PhaseField& f_husimi, const Potential& phi, double eps);

}  // namespace wvlab

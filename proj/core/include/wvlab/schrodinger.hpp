#pragma once

#include <memory>
#include <span>
#include <vector>

#include "wvlab/field.hpp"
#include "wvlab/potential.hpp"
#include "wvlab/spectral.hpp"

namespace wvlab {

/// Density matrix sum_m lambda_m |u_m><u_m| on the x-part of a grid.
struct OrbitalEnsemble {
  PhaseGrid grid;
  double eps = 0.0;
  std::vector<std::vector<cplx>> orbitals;
  std::vector<double> weights;

  /// Throws std::invalid_argument unless eps > 0, every orbital has
  /// nx^d samples and unit norm (1e-10), weights are >= 0 and sum to 1.
  void validate() const;
  /// rho(x) = sum_m lambda_m |u_m(x)|^2.
  SpatialField density() const;
};

double orbital_norm(const PhaseGrid& grid, std::span<const cplx> u);

/// (pi eps)^{-d/4} exp(-|x-x0|^2/(2 eps) + i k0.x/eps).
std::vector<cplx> coherent_state(const PhaseGrid& grid, double eps, std::span<const double> x0,
                                 std::span<const double> k0);
/// First excited harmonic-oscillator state along axis 0, centred at the
/// origin: sqrt(2/eps) x_0 times the ground state.
std::vector<cplx> excited_state(const PhaseGrid& grid, double eps);

/// Which sub-flow sits on the outside of the symmetric splitting.
enum class SplitOrder { PotentialFirst, KineticFirst };

/// Split-step solver for i eps u_t = -(eps^2/2) Lap u + (phi * rho) u with the
/// potential shared by all orbitals.
class NlsSolver {
 public:
  NlsSolver(OrbitalEnsemble ens, Potential phi, double dt, SplitOrder order = SplitOrder::PotentialFirst);
  ~NlsSolver();
  NlsSolver(NlsSolver&&) noexcept;
  NlsSolver& operator=(NlsSolver&&) noexcept;

  const OrbitalEnsemble& ensemble() const { return ens_; }
  double time() const { return time_; }
  void step();
  void advance_to(double t_end);

  /// sum_m lambda_m <u_m, -(eps^2/2) Lap u_m> + 1/2 \int rho (phi * rho).
  double energy();

 private:
  void kinetic(double dt);
  void potential(double dt);

  OrbitalEnsemble ens_;
  Potential phi_;
  double dt_;
  SplitOrder order_;
  double time_ = 0.0;
  std::unique_ptr<SpatialComplexTransform> fft_;
  std::vector<double> xi2_;
};

OrbitalEnsemble nls_step(const OrbitalEnsemble& ens, const Potential& phi, double dt,
                         SplitOrder order = SplitOrder::PotentialFirst);

/// f(x,k) = (2 pi)^{-d} sum_m lambda_m \int e^{iyk} conj(u_m(x + eps y/2))
/// u_m(x - eps y/2) dy on the y-grid dual to the k-grid (y = pi j / lk), with
/// the shifted orbitals formed by trigonometric interpolation.
PhaseField wigner_of_ensemble(const OrbitalEnsemble& ens);

struct HsBridge {
  double hs_norm = 0.0;
  double l2_of_wigner = 0.0;
  double ratio = 0.0;  // hs_norm / ((2 pi eps)^{d/2} l2_of_wigner)
};

HsBridge hs_bridge(const OrbitalEnsemble& ens);

/// Evolves ens0 with NlsSolver and f0 with WignerRun to time T at step dt and
/// returns ||W(ens(T)) - f(T)|| / ||f(T)||. Throws std::invalid_argument when
/// f0 is not the Wigner transform of ens0 to 1e-10 (relative).
double oracle_compare(const OrbitalEnsemble& ens0, const PhaseField& f0, const Potential& phi, double t_end,
                      double dt, SplitOrder order = SplitOrder::KineticFirst);

}  // namespace wvlab

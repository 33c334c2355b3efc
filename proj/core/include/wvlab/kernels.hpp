#pragma once

#include <vector>

#include "wvlab/field.hpp"
#include "wvlab/spectral.hpp"

namespace wvlab {

/// Split-step spectral kernels shared by the Wigner and Vlasov solvers.
///
/// All operators act in one of two partial Fourier pictures of a phase-space
/// field f(x,k):
///   - the momentum dual F(x,y) = \int e^{-iyk} f(x,k) dk, where the
///     interaction term is a pointwise multiplier, and
///   - the spatial dual G(xi,k) = \int e^{-i xi x} f(x,k) dx, where free
///     transport is the multiplier exp(-i xi.k t).
/// Both use r2c/c2r transforms, so outputs are real by construction and the
/// Nyquist modes of odd symbols are dropped.
///
/// A workspace owns its scratch arrays and plans; it is not safe to share one
/// between threads. Results do not depend on which workspace computed them.
class SplitStepKernels {
 public:
  explicit SplitStepKernels(const PhaseGrid& grid);

  const PhaseGrid& grid() const { return grid_; }

  /// k-marginal rho(x) = \int f dk.
  SpatialField density(const PhaseField& f) const;

  /// Quantum kick: F(x,y) *= exp{(i dt/eps) [V(x+eps y/2) - V(x-eps y/2)]},
  /// with V evaluated at the shifted points by trigonometric interpolation.
  void quantum_kick(PhaseField& f, const SpatialField& v, double eps, double dt);

  /// Classical kick g(x,k) -> g(x, k + dt grad V(x)), i.e.
  /// G(x,y) *= exp{i dt y.grad V(x)}.
  void classical_kick(PhaseField& f, const std::vector<SpatialField>& grad_v, double dt);

  /// f(x,k) -> f(x - k dt, k).
  void free_transport(PhaseField& f, double dt);

  /// Generator (i/eps)[V(x+eps y/2) - V(x-eps y/2)] applied in the dual.
  PhaseField apply_t_eps(const PhaseField& f, const SpatialField& v, double eps);
  /// grad V . grad_k f.
  PhaseField apply_t_0(const PhaseField& f, const std::vector<SpatialField>& grad_v);
  /// (T_eps - T_0) f evaluated through the combined symbol
  /// (2i/eps) IDFT[V_hat (sin a - a)], a = eps S.y/2, free of cancellation at
  /// small eps.
  PhaseField apply_t_difference(const PhaseField& f, const SpatialField& v, double eps);

  /// Real field D(x,y) = V(x+eps y/2) - V(x-eps y/2) on the half y-spectrum,
  /// layout [x][y]. `remove_linear` subtracts eps y.grad V (Taylor remainder).
  const std::vector<double>& shifted_difference(const SpatialField& v, double eps, bool remove_linear);

  /// y-wavenumbers (odd convention) of the half k-spectrum, d per mode.
  const ModeTable& y_modes() const { return y_modes_; }
  std::size_t y_half() const { return kfft_.modes().half; }

 private:
  void to_momentum_dual(const PhaseField& f);
  void from_momentum_dual(PhaseField& f);

  PhaseGrid grid_;
  KAxesTransform kfft_;
  XAxesTransform xfft_;     // columns = nk^d, for transport
  XAxesTransform shiftfft_;  // columns = half y-spectrum, for D(x,y)
  SpatialTransform vfft_;
  ModeTable y_modes_;
  ModeTable x_half_modes_;
  std::vector<double> diff_;
};

}  // namespace wvlab

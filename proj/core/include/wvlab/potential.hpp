#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "wvlab/field.hpp"
#include "wvlab/spectral.hpp"

namespace wvlab {

/// Spherically symmetric pair interaction with a closed-form Fourier
/// transform, phi_hat(S) = \int e^{-iSx} phi(x) dx.
///
/// Only the Gaussian family phi(x) = A exp(-|x|^2 / (2 sigma^2)) ships. It is
/// in H^1 and every Fourier moment M_n = \int |phi_hat(S)| |S|^n dS is finite,
/// so the certificates below are exact.
class Potential {
 public:
  static Potential gaussian(double amplitude, double width, int dim);

  const std::string& kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double width() const { return width_; }
  int dim() const { return dim_; }

  double value(double r2) const;
  double value(std::span<const double> x) const;
  /// Gradient component `axis` at x.
  double gradient(std::span<const double> x, int axis) const;
  /// phi_hat as a function of |S|^2.
  double fourier(double s2) const;

  /// sup |grad phi|; |A| e^{-1/2} / sigma in every dimension.
  double grad_sup() const { return grad_sup_; }
  /// Closed-form M_n, n = 0..4.
  double moment(int n) const;
  /// ||phi||_{H^1} from closed forms (L2 norm plus gradient L2 norm).
  double h1_norm() const;

 private:
  Potential() = default;

  std::string kind_;
  double amplitude_ = 0.0;
  double width_ = 1.0;
  int dim_ = 1;
  double grad_sup_ = 0.0;
  std::array<double, 5> moments_{};
};

/// Numerically integrated Fourier moment, checked against Potential::moment.
/// Throws std::invalid_argument for n outside 0..4.
double moment_certificate(const Potential& phi, int n);

/// Self-consistent field V = phi * rho and its gradient, by DFT
/// multiplication with phi_hat(S) and i S phi_hat(S).
struct HartreeField {
  SpatialField potential;
  std::vector<SpatialField> gradient;  // one per axis
};

HartreeField hartree_field(const SpatialField& rho, const Potential& phi);

/// Spectral gradient of a sampled periodic field.
std::vector<SpatialField> spectral_gradient(const SpatialField& v);

}  // namespace wvlab

#pragma once

#include <limits>
#include <vector>

#include "wvlab/field.hpp"

namespace wvlab {

/// C-infinity bump B(s) = exp(-1/(1-s^2)) on |s| < 1 and its first three
/// derivatives (order 0..3).
double bump(double s, int order = 0);
/// \int B over (-1, 1).
inline constexpr double kBumpMass = 0.4439938161680794;

/// Separable compactly supported classical density
///   g0(x,k) = prod_a b(x_a / sigma_x) b(k_a / k_width) / normalization,
/// with unit mass and |k| support k_width * sqrt(d) (k_width on every axis).
class ClassicalProfile {
 public:
  ClassicalProfile(int d, double sigma_x, double k_width);

  int dim() const { return d_; }
  double sigma_x() const { return sigma_x_; }
  double k_width() const { return k_width_; }

  /// Pointwise value (d coordinates each).
  double value(const double* x, const double* k) const;
  /// Sampled on a grid and renormalized to unit quadrature mass.
  PhaseField sample(const PhaseGrid& grid) const;

  /// Sum of L2 norms of all derivatives of total order <= 3 (same
  /// convention as sobolev_norm), from one-dimensional integrals of the bump
  /// derivatives.
  double h3_norm() const;
  /// \int |k|^2 g0.
  double k_second_moment() const;

 private:
  int d_;
  double sigma_x_, k_width_;
};

/// The shipped profile: k_width = M0/2, so supp g0 lies in |k| <= M0/2 per
/// axis. Throws std::invalid_argument unless M0 > 0 and sigma_x > 0.
ClassicalProfile default_profile(double m0, int d, double sigma_x = 2.0);

/// Coherent-state mixture: the profile smoothed with per-axis variance eps/2
/// in x and k, tagged with eps. Throws std::invalid_argument if eps <= 0 or
/// the profile support does not fit in the box.
PhaseField coherent_mixture(const ClassicalProfile& profile, const PhaseGrid& grid, double eps);

/// Hypothesis diagnostics of one quantum datum.
struct Admissibility {
  double eps = 0.0;
  double mass = 0.0;
  double h3_norm = 0.0;
  double k_second_moment = 0.0;
  double tail_l2 = 0.0;  // \int_{|k| > M0/2} |f0|^2
  double tail_l1 = 0.0;  // \int_{|k| > M0/4} |f0|
  double l1_norm = 0.0;
  double boundary_mass = 0.0;
};

Admissibility admissibility(const PhaseField& f0, double m0);

/// Report over a family f0^eps. Each flag is a verdict, never an exception.
struct AdmissibilityReport {
  double m0 = 0.0, alpha = 0.0;
  std::vector<Admissibility> entries;
  double tail_l2_slope = 0.0;  // NaN when not fittable
  double tail_l1_slope = 0.0;
  bool mass_ok = false;        // every mass = 1 within 1e-10
  double h3_reference = 0.0;   // seed H3 norm, or min over the family if none given
  bool h3_uniform = false;     // max H3 <= 1.05 h3_reference
  bool tail_l2_ok = false;     // O(eps^{2 alpha}) or negligible
  bool tail_l1_ok = false;     // O(eps^alpha) or negligible
  bool admissible() const { return mass_ok && h3_uniform && tail_l2_ok && tail_l1_ok; }
};

// Smoothing is an H3 contraction, so with the seed norm as reference the bound
// is uniform in eps; without one the family is only compared against itself.
AdmissibilityReport admissibility_report(const std::vector<PhaseField>& family, double m0, double alpha,
                                         double h3_reference = std::numeric_limits<double>::quiet_NaN());

}  // namespace wvlab

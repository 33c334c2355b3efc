#pragma once

#include <utility>

#include "wvlab/field.hpp"
#include "wvlab/potential.hpp"

namespace wvlab {

/// Gaussian smoothing with per-axis variances var_x in x and var_k in k,
/// applied as the dual multiplier exp(-(var_x |a|^2 + var_k |b|^2)/2).
PhaseField gaussian_smooth(const PhaseField& f, double var_x, double var_k);

/// Husimi transform: smoothing of per-axis variance eps/2 in x and in k,
/// eps = f.epsilon(). Throws std::invalid_argument when eps <= 0.
PhaseField husimi_transform(const PhaseField& f);
/// Partial smoothings (x only / k only) with the same variance.
PhaseField husimi_x(const PhaseField& f);
PhaseField husimi_k(const PhaseField& f);

/// Minimum of f over the grid.
double positivity_defect(const PhaseField& f);

/// k-second moments of f and of its Husimi transform.
std::pair<double, double> second_moment_shift(const PhaseField& f);

/// E1 = -(eps/2) div_x div_k f_husimi.
PhaseField error_E1(const PhaseField& f_husimi);

/// E2 = Phi(T_eps^f f) - T_eps^{f~} f~, assembled directly on the (p,q) dual
/// grid: with V_hat = phi_hat rho_hat^f,
///   E2_hat(p,q) = (i/eps) (1/N) sum_S V_hat(S) 2i sin(eps S.q/2) F_hat(p-S,q)
///                 [exp(-eps(p^2+q^2)/4) - exp(-eps q^2/4) exp(-eps((p-S)^2+S^2)/4)].
/// The bracket is formed without cancellation, so E2 stays accurate at small
/// eps where the operator difference would lose every digit.
PhaseField error_E2(const PhaseField& f, const Potential& phi);

/// Classical seed: cut-off, renormalized Husimi transform of a quantum datum.
struct SeedReport {
  PhaseField g0;
  double normalization = 0.0;  // N = 1 / \int chi f~
  double gap = 0.0;            // |1 - N|
  double tail = 0.0;           // \int (1 - chi) f~
  double l2_distance = 0.0;    // ||f0 - g0||
  double h3_norm = 0.0;
  double support_radius = 0.0;  // largest |k| with g0 != 0
  double min_value = 0.0;
};

/// Smooth cutoff, 1 on |k| <= M0/2, 0 on |k| >= M0.
double cutoff(double k_abs, double m0);

/// g0 = chi f~0 / \int chi f~0. Throws std::invalid_argument when f0 has no
/// positive epsilon or the cut mass is not positive.
SeedReport classical_seed(const PhaseField& f0, double m0);

}  // namespace wvlab

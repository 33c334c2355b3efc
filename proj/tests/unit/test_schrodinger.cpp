#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wvlab/phase_space.hpp"
#include "wvlab/schrodinger.hpp"

using namespace wvlab;
using std::numbers::pi;

namespace {

OrbitalEnsemble coherent(const PhaseGrid& g, double eps, double x0, double k0) {
  const double x[1] = {x0}, k[1] = {k0};
  return OrbitalEnsemble{g, eps, {coherent_state(g, eps, x, k)}, {1.0}};
}

double mean_x(const OrbitalEnsemble& e) {
  const SpatialField rho = e.density();
  double s = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) s += e.grid.x_axis(i) * rho[i];
  return s * e.grid.hx();
}

}  // namespace

TEST(Orbitals, NormalizationAndValidation) {
  const PhaseGrid g = make_grid(1, 256, 256, 8.0, 8.0);
  const OrbitalEnsemble e = coherent(g, 0.1, 0.3, 0.2);
  EXPECT_NEAR(orbital_norm(g, e.orbitals[0]), 1.0, 1e-12);
  EXPECT_NEAR(orbital_norm(g, excited_state(g, 0.1)), 1.0, 1e-12);
  EXPECT_NO_THROW(e.validate());
  OrbitalEnsemble bad = e;
  bad.weights = {0.9};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = e;
  for (auto& z : bad.orbitals[0]) z *= 1.01;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Nls, FreePacketMovesAtGroupVelocity) {
  const PhaseGrid g = make_grid(1, 256, 256, 8.0, 8.0);
  NlsSolver s(coherent(g, 0.1, -1.0, 0.8), Potential::gaussian(0.0, 1.0, 1), 0.01);
  s.advance_to(1.5);
  EXPECT_NEAR(mean_x(s.ensemble()), -1.0 + 0.8 * 1.5, 1e-10);
  // Free Gaussian closed form: |u|^2 has variance eps/2 (1 + t^2).
  const double var = 0.05 * (1.0 + 1.5 * 1.5);
  const SpatialField rho = s.ensemble().density();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double x = g.x_axis(i) - 0.2;
    EXPECT_NEAR(rho[i], std::exp(-0.5 * x * x / var) / std::sqrt(2 * pi * var), 1e-10);
  }
}

TEST(Nls, NormAndEnergyConservation) {
  const PhaseGrid g = make_grid(1, 256, 256, 8.0, 8.0);
  const Potential phi = Potential::gaussian(1.0, 1.0, 1);
  OrbitalEnsemble e = coherent(g, 0.1, 0.5, 0.3);
  e.orbitals.push_back(excited_state(g, 0.1));
  e.weights = {0.6, 0.4};
  NlsSolver s(e, phi, 1e-3);
  const double e0 = s.energy();
  for (int n = 0; n < 300; ++n) {
    const double before = orbital_norm(g, s.ensemble().orbitals[1]);
    s.step();
    EXPECT_NEAR(orbital_norm(g, s.ensemble().orbitals[1]), before, 1e-12);
  }
  EXPECT_LT(std::abs(s.energy() - e0) / std::abs(e0), 1e-6);
  EXPECT_NEAR(s.time(), 0.3, 1e-12);
}

TEST(Nls, StepHelperMatchesSolver) {
  const PhaseGrid g = make_grid(1, 64, 64, 8.0, 8.0);
  const Potential phi = Potential::gaussian(1.0, 1.0, 1);
  const OrbitalEnsemble e = coherent(g, 0.2, 0.0, 0.5);
  const OrbitalEnsemble a = nls_step(e, phi, 0.01);
  NlsSolver s(e, phi, 0.01);
  s.step();
  for (std::size_t i = 0; i < a.orbitals[0].size(); ++i) EXPECT_EQ(a.orbitals[0][i], s.ensemble().orbitals[0][i]);
}

TEST(WignerOfEnsemble, GroundStateClosedForm) {
  const PhaseGrid g = make_grid(1, 256, 256, 8.0, 8.0);
  const double eps = 0.1;
  const PhaseField w = wigner_of_ensemble(coherent(g, eps, 0.0, 0.0));
  const PhaseField ref = oracle::sample(g, [&](double x, double k) { return oracle::wigner_coherent(x, k, 0, 0, eps); });
  EXPECT_LT(oracle::max_diff(w, ref), 1e-10);
  EXPECT_NEAR(max_value(w), 1.0 / (pi * eps), 1e-10);
  EXPECT_NEAR(integrate(w), 1.0, 1e-8);
}

TEST(WignerOfEnsemble, MovingCoherentStateAgainstQuadrature) {
  const PhaseGrid g = make_grid(1, 128, 128, 8.0, 8.0);
  const double eps = 0.2, x0 = 0.6, k0 = -0.5;
  const PhaseField w = wigner_of_ensemble(coherent(g, eps, x0, k0));
  const auto u = [&](double x) {
    return std::pow(pi * eps, -0.25) * std::exp(-0.5 * (x - x0) * (x - x0) / eps) * std::polar(1.0, k0 * x / eps);
  };
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{70, 55}, {74, 60}, {64, 64}, {80, 50}}) {
    const double q = oracle::naive_wigner(u, eps, g.x_axis(i), g.k_axis(j));
    EXPECT_NEAR(w.at(i, j), q, 1e-9);
    EXPECT_NEAR(w.at(i, j), oracle::wigner_coherent(g.x_axis(i), g.k_axis(j), x0, k0, eps), 1e-10);
  }
}

TEST(WignerOfEnsemble, ExcitedStateIsNegativeAtOrigin) {
  const PhaseGrid g = make_grid(1, 256, 256, 8.0, 8.0);
  const double eps = 0.1;
  const PhaseField w = wigner_of_ensemble(OrbitalEnsemble{g, eps, {excited_state(g, eps)}, {1.0}});
  const PhaseField ref = oracle::sample(g, [&](double x, double k) { return oracle::wigner_excited(x, k, eps); });
  EXPECT_LT(oracle::max_diff(w, ref), 1e-10);
  EXPECT_NEAR(w.at(128, 128), -1.0 / (pi * eps), 1e-10);
  EXPECT_NEAR(integrate(w), 1.0, 1e-8);
}

TEST(HsBridge, PureAndMixed) {
  const PhaseGrid g = make_grid(1, 128, 128, 8.0, 8.0);
  const double eps = 0.1;
  const HsBridge pure = hs_bridge(coherent(g, eps, 0.2, 0.1));
  EXPECT_NEAR(pure.hs_norm, 1.0, 1e-12);
  EXPECT_NEAR(pure.l2_of_wigner, 1.0 / std::sqrt(2 * pi * eps), 1e-8);
  EXPECT_NEAR(pure.ratio, 1.0, 1e-6);
  const double zero[1] = {0.0};
  const OrbitalEnsemble mixed{g, eps, {coherent_state(g, eps, zero, zero), excited_state(g, eps)}, {0.5, 0.5}};
  const HsBridge m = hs_bridge(mixed);
  EXPECT_NEAR(m.hs_norm, std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(m.ratio, 1.0, 1e-6);
}

TEST(OracleCompare, FreeCaseIsExact) {
  const PhaseGrid g = make_grid(1, 256, 256, 8.0, 8.0);
  const OrbitalEnsemble e = coherent(g, 0.1, -0.5, 0.6);
  EXPECT_LT(oracle_compare(e, wigner_of_ensemble(e), Potential::gaussian(0.0, 1.0, 1), 0.5, 0.01), 1e-8);
}

TEST(OracleCompare, RejectsMismatchedDatum) {
  const PhaseGrid g = make_grid(1, 64, 64, 8.0, 8.0);
  const OrbitalEnsemble e = coherent(g, 0.2, 0.0, 0.0);
  PhaseField f0 = wigner_of_ensemble(e);
  f0[100] += 1e-3;
  EXPECT_THROW(oracle_compare(e, f0, Potential::gaussian(1.0, 1.0, 1), 0.1, 0.01), std::invalid_argument);
}

TEST(OracleCompare, MonotoneInCoupling) {
  const PhaseGrid g = make_grid(1, 128, 128, 8.0, 8.0);
  const OrbitalEnsemble e = coherent(g, 0.1, 0.0, 0.3);
  const PhaseField f0 = wigner_of_ensemble(e);
  double prev = 0.0;
  for (double a : {0.1, 0.2, 0.4, 0.8}) {
    const double d = oracle_compare(e, f0, Potential::gaussian(a, 1.0, 1), 0.3, 0.01);
    EXPECT_GT(d, prev) << "amplitude " << a;
    prev = d;
  }
}

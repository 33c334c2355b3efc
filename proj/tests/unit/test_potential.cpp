#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "wvlab/potential.hpp"

using namespace wvlab;
using std::numbers::pi;

TEST(Potential, ZeroAmplitude) {
  const Potential p = Potential::gaussian(0.0, 1.0, 1);
  const double x[1] = {0.3};
  EXPECT_EQ(p.value(x), 0.0);
  EXPECT_EQ(p.grad_sup(), 0.0);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(p.moment(n), 0.0);
    EXPECT_EQ(moment_certificate(p, n), 0.0);
  }
}

TEST(Potential, GradientSupMatchesDenseSampling) {
  const Potential p = Potential::gaussian(1.0, 1.0, 1);
  EXPECT_NEAR(p.grad_sup(), std::exp(-0.5), 1e-15);
  double best = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    const double x[1] = {-5.0 + 1e-4 * 0.5 * i};
    best = std::max(best, std::abs(p.gradient(x, 0)));
  }
  EXPECT_NEAR(best, 0.6065306597, 1e-8);
  EXPECT_LE(best, p.grad_sup() + 1e-15);
}

TEST(Potential, FourierMoments) {
  const Potential p = Potential::gaussian(1.0, 1.0, 1);
  // phi^(S) = sqrt(2 pi) e^{-S^2/2}.
  EXPECT_NEAR(p.fourier(0.81), std::sqrt(2 * pi) * std::exp(-0.405), 1e-14);
  EXPECT_NEAR(p.moment(0), 2 * pi, 1e-12);
  EXPECT_NEAR(moment_certificate(p, 0), 2 * pi, 1e-10);
  EXPECT_NEAR(p.moment(1), 2 * std::sqrt(2 * pi), 1e-12);
  EXPECT_NEAR(moment_certificate(p, 1), 2 * std::sqrt(2 * pi), 1e-10);
  for (int n = 0; n <= 4; ++n) {
    EXPECT_TRUE(std::isfinite(moment_certificate(p, n)));
    EXPECT_NEAR(moment_certificate(p, n), p.moment(n), 1e-9 * p.moment(n));
  }
  // d = 2, width 0.5: radial quadrature vs closed form.
  const Potential q = Potential::gaussian(0.7, 0.5, 2);
  for (int n = 0; n <= 4; ++n) EXPECT_NEAR(moment_certificate(q, n), q.moment(n), 1e-9 * q.moment(n));
}

TEST(Hartree, ZeroDensity) {
  const PhaseGrid g = make_grid(1, 64, 8, 8.0, 1.0);
  const HartreeField h = hartree_field(SpatialField(g), Potential::gaussian(1.0, 1.0, 1));
  for (double v : h.potential.values) EXPECT_EQ(v, 0.0);
  for (double v : h.gradient[0].values) EXPECT_EQ(v, 0.0);
}

TEST(Hartree, SingleCellMatchesDirectConvolution) {
  const PhaseGrid g = make_grid(1, 128, 8, 8.0, 1.0);
  const Potential phi = Potential::gaussian(1.3, 0.8, 1);
  SpatialField rho(g);
  const std::size_t j0 = 70;
  rho[j0] = 0.4 / g.hx();
  const HartreeField h = hartree_field(rho, phi);
  const auto direct = oracle::direct_convolution(g, rho.values, [](double r) { return 1.3 * std::exp(-r * r / 1.28); });
  for (std::size_t i = 0; i < g.nx(); ++i) {
    EXPECT_NEAR(h.potential[i], direct[i], 1e-12);
    const double r = g.x_axis(i) - g.x_axis(j0);
    EXPECT_NEAR(h.potential[i], 0.4 * 1.3 * std::exp(-r * r / 1.28), 1e-12);
  }
}

TEST(Hartree, SmoothDensityAndGradient) {
  const PhaseGrid g = make_grid(1, 128, 8, 8.0, 1.0);
  const Potential phi = Potential::gaussian(1.0, 1.0, 1);
  SpatialField rho(g);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (int img = -2; img <= 2; ++img) rho[i] += std::exp(-std::pow(g.x_axis(i) - 0.5 + 16.0 * img, 2)) / std::sqrt(pi);
  }
  const HartreeField h = hartree_field(rho, phi);
  // Gaussian * Gaussian: V(x) = sqrt(2/3) exp(-(x-1/2)^2/3).
  // Periodic box: sum the nearest images.
  for (std::size_t i = 0; i < g.nx(); ++i) {
    double v = 0.0, dv = 0.0;
    for (int img = -2; img <= 2; ++img) {
      const double x = g.x_axis(i) - 0.5 + 16.0 * img;
      v += std::sqrt(2.0 / 3.0) * std::exp(-x * x / 3.0);
      dv += -2.0 * x / 3.0 * std::sqrt(2.0 / 3.0) * std::exp(-x * x / 3.0);
    }
    EXPECT_NEAR(h.potential[i], v, 1e-12);
    EXPECT_NEAR(h.gradient[0][i], dv, 1e-11);
  }
}

TEST(Hartree, SymmetricDensityGivesEvenPotential) {
  const PhaseGrid g = make_grid(1, 128, 8, 8.0, 1.0);
  SpatialField rho(g);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const double x = g.x_axis(i);
    rho[i] = std::exp(-std::pow(x - 1.5, 2)) + std::exp(-std::pow(x + 1.5, 2));
  }
  const HartreeField h = hartree_field(rho, Potential::gaussian(1.0, 1.0, 1));
  // x_i -> -x_i is i -> n - i on this grid.
  for (std::size_t i = 1; i < g.nx(); ++i) EXPECT_NEAR(h.potential[i], h.potential[g.nx() - i], 1e-13);
}

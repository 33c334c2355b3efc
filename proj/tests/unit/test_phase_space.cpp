#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "oracles.hpp"
#include "wvlab/initial_data.hpp"
#include "wvlab/phase_space.hpp"

using namespace wvlab;

TEST(Grid, SpacingArithmetic) {
  const PhaseGrid a = make_grid(1, 8, 8, 1.0, 1.0);
  EXPECT_DOUBLE_EQ(a.hx(), 0.25);
  EXPECT_DOUBLE_EQ(a.hk(), 0.25);
  const PhaseGrid b = make_grid(1, 256, 256, 8.0, 8.0);
  EXPECT_DOUBLE_EQ(b.hx(), 0.0625);
  EXPECT_DOUBLE_EQ(b.hk(), 0.0625);
  const PhaseGrid c = make_grid(2, 64, 64, 4.0, 4.0);
  EXPECT_EQ(c.x_points(), 64u * 64u);
  EXPECT_EQ(c.k_points(), 64u * 64u);
  EXPECT_EQ(PhaseField(c).size(), 64u * 64u * 64u * 64u);
}

TEST(Grid, RejectsBadShapes) {
  EXPECT_THROW(make_grid(0, 8, 8, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_grid(1, 12, 8, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_grid(1, 8, 8, -1, 1), std::invalid_argument);
}

TEST(Integrate, Trivial) {
  const PhaseGrid g = make_grid(1, 16, 16, 1.0, 1.0);
  EXPECT_EQ(integrate(PhaseField(g)), 0.0);
  PhaseField one(g);
  for (auto& v : one.values()) v = 1.0;
  EXPECT_NEAR(integrate(one), 4.0, 1e-14);
}

TEST(Integrate, GaussianMixtureHasUnitMass) {
  const PhaseGrid g = make_grid(1, 128, 128, 8.0, 8.0);
  const PhaseField f = oracle::sample(g, [](double x, double k) { return oracle::gauss2(x, k, 0.3, -0.2, 0.4, 0.3); });
  EXPECT_NEAR(integrate(f), 1.0, 1e-10);
  EXPECT_NEAR(integrate(f), oracle::quad(f), 1e-13);
}

TEST(Norms, ZeroField) {
  const PhaseField z(make_grid(1, 16, 16, 2.0, 2.0));
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(sobolev_norm(z, m), 0.0);
  EXPECT_EQ(l2_norm(z), 0.0);
}

TEST(Norms, NestedOrders) {
  const PhaseGrid g = make_grid(1, 64, 64, 4.0, 4.0);
  const PhaseField f = oracle::sample(g, [](double x, double k) {
    return std::sin(std::numbers::pi * x / 4.0) * std::exp(-k * k);
  });
  EXPECT_NEAR(sobolev_norm(f, 0), l2_norm(f), 1e-12);
  EXPECT_GE(sobolev_norm(f, 1), sobolev_norm(f, 0));
  EXPECT_GE(sobolev_norm(f, 2), sobolev_norm(f, 1));
  EXPECT_GE(sobolev_norm(f, 3), sobolev_norm(f, 2));
}

TEST(Norms, GaussianDerivativeClosedForm) {
  // ||d_x^a d_k^b e^{-(x^2+k^2)/2}||^2 = Gamma(a+1/2) Gamma(b+1/2).
  const PhaseGrid g = make_grid(1, 128, 128, 10.0, 10.0);
  const PhaseField f = oracle::sample(g, [](double x, double k) { return std::exp(-0.5 * (x * x + k * k)); });
  EXPECT_NEAR(l2_norm(f), oracle::quad_l2(f), 1e-12);
  for (int m = 0; m <= 3; ++m) {
    double expect = 0.0;
    for (int a = 0; a <= m; ++a)
      for (int b = 0; a + b <= m; ++b) expect += std::sqrt(std::tgamma(a + 0.5) * std::tgamma(b + 0.5));
    EXPECT_NEAR(sobolev_norm(f, m), expect, 1e-8 * expect) << "m = " << m;
  }
}

TEST(Norms, L1AndExtrema) {
  const PhaseGrid g = make_grid(1, 32, 32, 4.0, 4.0);
  const PhaseField f = oracle::sample(g, [](double x, double k) { return std::sin(x) * std::cos(k); });
  double l1 = 0.0, mx = -1e300, mn = 1e300;
  for (double v : f.values()) {
    l1 += std::abs(v);
    mx = std::max(mx, v);
    mn = std::min(mn, v);
  }
  EXPECT_NEAR(l1_norm(f), l1 * g.cell_volume(), 1e-12);
  EXPECT_EQ(max_value(f), mx);
  EXPECT_EQ(min_value(f), mn);
  EXPECT_EQ(max_abs(f), std::max(mx, -mn));
}

class DumpTest : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "wvlab_dump_test";
  void SetUp() override { std::filesystem::create_directories(dir); }
  void TearDown() override { std::filesystem::remove_all(dir); }
};

TEST_F(DumpTest, RoundTripIsBitEqual) {
  const PhaseGrid g = make_grid(2, 8, 16, 2.0, 3.0);
  PhaseField f(g, 0.125, 0.75);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (auto& v : f.values()) v = u(oracle::rng());
  f[3] = -0.0;
  f[5] = std::numeric_limits<double>::denorm_min();
  dump(f, dir / "f.wvf");
  const PhaseField h = load(dir / "f.wvf");
  EXPECT_EQ(h.grid(), g);
  EXPECT_EQ(h.epsilon(), 0.125);
  EXPECT_EQ(h.time(), 0.75);
  ASSERT_EQ(h.size(), f.size());
  EXPECT_EQ(std::memcmp(h.values().data(), f.values().data(), 8 * f.size()), 0);
}

TEST_F(DumpTest, CorruptedMagic) {
  const PhaseField f(make_grid(1, 8, 8, 1, 1));
  dump(f, dir / "f.wvf");
  {
    std::fstream io(dir / "f.wvf", std::ios::in | std::ios::out | std::ios::binary);
    io.seekp(0);
    io.put('X');
  }
  EXPECT_THROW(load(dir / "f.wvf"), FormatError);
}

TEST_F(DumpTest, PayloadLengthMismatch) {
  // A d = 2 payload behind a header that claims d = 1.
  const PhaseField f(make_grid(2, 8, 8, 1, 1));
  dump(f, dir / "f.wvf");
  {
    std::fstream io(dir / "f.wvf", std::ios::in | std::ios::out | std::ios::binary);
    io.seekp(8);
    io.put(1);
  }
  EXPECT_THROW(load(dir / "f.wvf"), FormatError);
}

TEST(BoundaryMass, ConcentratedFieldIsInterior) {
  const PhaseGrid g = make_grid(1, 64, 64, 8.0, 8.0);
  const PhaseField f = oracle::sample(g, [](double x, double k) { return oracle::gauss2(x, k, 0, 0, 0.5, 0.5); });
  EXPECT_LT(boundary_mass(f), 1e-20);
  const PhaseField edge = oracle::sample(g, [](double x, double k) { return oracle::gauss2(x, k, 7.6, 0, 0.1, 0.5); });
  EXPECT_GT(boundary_mass(edge), 0.1);
}

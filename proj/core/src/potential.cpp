#include "wvlab/potential.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wvlab {

namespace {

// Surface area of the unit sphere in R^d.
double sphere_area(int d) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

}  // namespace

Potential Potential::gaussian(double amplitude, double width, int dim) {
  if (!(width > 0.0) || !std::isfinite(width))
    throw std::invalid_argument("gaussian_potential: width must be positive");
  if (!std::isfinite(amplitude)) throw std::invalid_argument("gaussian_potential: amplitude must be finite");
  if (dim < 1) throw std::invalid_argument("gaussian_potential: dimension must be >= 1");
  Potential p;
  p.kind_ = "gaussian";
  p.amplitude_ = amplitude;
  p.width_ = width;
  p.dim_ = dim;
  p.grad_sup_ = std::abs(amplitude) * std::exp(-0.5) / width;
  const double s2 = width * width;
  const double prefactor = std::abs(amplitude) * std::pow(2.0 * std::numbers::pi * s2, 0.5 * dim);
  for (int n = 0; n <= 4; ++n) {
    const double a = 0.5 * (n + dim);
    p.moments_[static_cast<std::size_t>(n)] =
        prefactor * sphere_area(dim) * 0.5 * std::pow(2.0 / s2, a) * std::tgamma(a);
  }
  return p;
}

double Potential::value(double r2) const {
  return amplitude_ * std::exp(-0.5 * r2 / (width_ * width_));
}

double Potential::value(std::span<const double> x) const {
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  return value(r2);
}

double Potential::gradient(std::span<const double> x, int axis) const {
  return -x[static_cast<std::size_t>(axis)] / (width_ * width_) * value(x);
}

double Potential::fourier(double s2) const {
  const double w2 = width_ * width_;
  return amplitude_ * std::pow(2.0 * std::numbers::pi * w2, 0.5 * dim_) * std::exp(-0.5 * w2 * s2);
}

double Potential::moment(int n) const {
  if (n < 0 || n > 4) throw std::invalid_argument("Potential::moment: n must be in 0..4");
  return moments_[static_cast<std::size_t>(n)];
}

double Potential::h1_norm() const {
  const double base = amplitude_ * amplitude_ * std::pow(std::numbers::pi * width_ * width_, 0.5 * dim_);
  const double l2 = std::sqrt(base);
  const double dl2 = std::sqrt(base / (2.0 * width_ * width_));
  return l2 + dim_ * dl2;
}

double moment_certificate(const Potential& phi, int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("moment_certificate: n must be in 0..4");
  if (phi.amplitude() == 0.0) return 0.0;
  const int d = phi.dim();
  auto radial = [&](double r) { return std::abs(phi.fourier(r * r)) * std::pow(r, n + d - 1); };
  double err = 0.0;
  const double val = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      radial, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-14, &err);
  return sphere_area(d) * val;
}

HartreeField hartree_field(const SpatialField& rho, const Potential& phi) {
  const PhaseGrid& g = rho.grid;
  if (rho.values.size() != g.x_points())
    throw std::invalid_argument("hartree_field: density does not match its grid");
  if (phi.dim() != g.dim()) throw std::invalid_argument("hartree_field: potential/grid dimension mismatch");

  const int d = g.dim();
  SpatialTransform fft(g);
  std::copy(rho.values.begin(), rho.values.end(), fft.real().begin());
  fft.forward();
  const ModeTable modes(fft.modes(), g.lx());
  std::vector<cplx> vhat(fft.spectrum().begin(), fft.spectrum().end());
  for (std::size_t m = 0; m < vhat.size(); ++m) vhat[m] *= phi.fourier(modes.even_norm2[m]);

  const double inv = 1.0 / fft.scale();
  HartreeField out;
  std::copy(vhat.begin(), vhat.end(), fft.spectrum().begin());
  fft.backward();
  out.potential = SpatialField(g);
  for (std::size_t i = 0; i < g.x_points(); ++i) out.potential[i] = fft.real()[i] * inv;

  for (int a = 0; a < d; ++a) {
    auto spec = fft.spectrum();
    for (std::size_t m = 0; m < vhat.size(); ++m) spec[m] = cplx(0.0, modes.odd_at(m)[a]) * vhat[m];
    fft.backward();
    SpatialField grad(g);
    for (std::size_t i = 0; i < g.x_points(); ++i) grad[i] = fft.real()[i] * inv;
    out.gradient.push_back(std::move(grad));
  }
  return out;
}

std::vector<SpatialField> spectral_gradient(const SpatialField& v) {
  const PhaseGrid& g = v.grid;
  SpatialTransform fft(g);
  std::copy(v.values.begin(), v.values.end(), fft.real().begin());
  fft.forward();
  const ModeTable modes(fft.modes(), g.lx());
  std::vector<cplx> vhat(fft.spectrum().begin(), fft.spectrum().end());
  std::vector<SpatialField> out;
  for (int a = 0; a < g.dim(); ++a) {
    auto spec = fft.spectrum();
    for (std::size_t m = 0; m < vhat.size(); ++m) spec[m] = cplx(0.0, modes.odd_at(m)[a]) * vhat[m];
    fft.backward();
    SpatialField grad(g);
    for (std::size_t i = 0; i < g.x_points(); ++i) grad[i] = fft.real()[i] / fft.scale();
    out.push_back(std::move(grad));
  }
  return out;
}

}  // namespace wvlab

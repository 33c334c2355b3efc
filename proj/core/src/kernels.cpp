#include "wvlab/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace wvlab {

namespace {

// sin(a) - a without cancellation for small a.
double sin_minus_identity(double a) {
  if (std::abs(a) < 0.1) {
    const double a2 = a * a;
    return a * a2 * (-1.0 / 6.0 + a2 * (1.0 / 120.0 + a2 * (-1.0 / 5040.0 + a2 / 362880.0)));
  }
  return std::sin(a) - a;
}

void check_grid(const PhaseGrid& expected, const PhaseGrid& actual) {
  if (expected != actual) throw std::invalid_argument("SplitStepKernels: grid mismatch");
}

}  // namespace

SplitStepKernels::SplitStepKernels(const PhaseGrid& grid)
    : grid_(grid),
      kfft_(grid),
      xfft_(grid, grid.k_points()),
      shiftfft_(grid, kfft_.modes().half),
      vfft_(grid),
      y_modes_(kfft_.modes(), grid.lk()),
      x_half_modes_(vfft_.modes(), grid.lx()) {}

SpatialField SplitStepKernels::density(const PhaseField& f) const {
  check_grid(grid_, f.grid());
  SpatialField rho(grid_);
  const std::size_t nk = grid_.k_points();
  const double w = grid_.k_cell();
  for (std::size_t i = 0; i < grid_.x_points(); ++i) {
    double s = 0.0;
    const double* row = f.values().data() + i * nk;
    for (std::size_t j = 0; j < nk; ++j) s += row[j];
    rho[i] = s * w;
  }
  return rho;
}

void SplitStepKernels::to_momentum_dual(const PhaseField& f) {
  check_grid(grid_, f.grid());
  std::copy(f.values().begin(), f.values().end(), kfft_.real().begin());
  kfft_.forward();
}

void SplitStepKernels::from_momentum_dual(PhaseField& f) {
  kfft_.backward();
  const double inv = 1.0 / kfft_.scale();
  auto out = f.values();
  auto in = kfft_.real();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = in[i] * inv;
}

const std::vector<double>& SplitStepKernels::shifted_difference(const SpatialField& v, double eps,
                                                                bool remove_linear) {
  check_grid(grid_, v.grid);
  const int d = grid_.dim();
  std::copy(v.values.begin(), v.values.end(), vfft_.real().begin());
  vfft_.forward();
  auto vhat = vfft_.spectrum();

  const std::size_t nyh = kfft_.modes().half;
  const std::size_t nxh = vfft_.modes().half;
  auto spec = shiftfft_.spectrum();
  for (std::size_t m = 0; m < nxh; ++m) {
    const double* s = x_half_modes_.odd_at(m);
    const cplx vm = vhat[m];
    for (std::size_t j = 0; j < nyh; ++j) {
      const double* y = y_modes_.odd_at(j);
      double sy = 0.0;
      for (int a = 0; a < d; ++a) sy += s[a] * y[a];
      const double arg = 0.5 * eps * sy;
      const double sym = remove_linear ? sin_minus_identity(arg) : std::sin(arg);
      spec[m * nyh + j] = vm * cplx(0.0, 2.0 * sym);
    }
  }
  shiftfft_.backward();
  // Two unnormalized transforms: forward of V and backward here.
  const double inv = 1.0 / vfft_.scale();
  diff_.resize(grid_.x_points() * nyh);
  auto real = shiftfft_.real();
  for (std::size_t i = 0; i < diff_.size(); ++i) diff_[i] = real[i] * inv;
  return diff_;
}

void SplitStepKernels::quantum_kick(PhaseField& f, const SpatialField& v, double eps, double dt) {
  if (!(eps > 0.0)) throw std::invalid_argument("quantum_kick: epsilon must be positive");
  to_momentum_dual(f);
  const auto& diff = shifted_difference(v, eps, false);
  auto spec = kfft_.spectrum();
  const double c = dt / eps;
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= std::polar(1.0, c * diff[i]);
  from_momentum_dual(f);
}

void SplitStepKernels::classical_kick(PhaseField& f, const std::vector<SpatialField>& grad_v, double dt) {
  const int d = grid_.dim();
  if (static_cast<int>(grad_v.size()) != d) throw std::invalid_argument("classical_kick: gradient size");
  to_momentum_dual(f);
  auto spec = kfft_.spectrum();
  const std::size_t nyh = kfft_.modes().half;
  for (std::size_t i = 0; i < grid_.x_points(); ++i) {
    for (std::size_t j = 0; j < nyh; ++j) {
      const double* y = y_modes_.odd_at(j);
      double yf = 0.0;
      for (int a = 0; a < d; ++a) yf += y[a] * grad_v[static_cast<std::size_t>(a)][i];
      spec[i * nyh + j] *= std::polar(1.0, dt * yf);
    }
  }
  from_momentum_dual(f);
}

void SplitStepKernels::free_transport(PhaseField& f, double dt) {
  check_grid(grid_, f.grid());
  if (dt == 0.0) return;
  const int d = grid_.dim();
  std::copy(f.values().begin(), f.values().end(), xfft_.real().begin());
  xfft_.forward();
  auto spec = xfft_.spectrum();
  const std::size_t nk = grid_.k_points();
  const std::size_t nxh = xfft_.modes().half;
  std::vector<double> kc(nk * static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < nk; ++j)
    for (int a = 0; a < d; ++a) kc[j * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)] = grid_.k_coord(j, a);
  for (std::size_t m = 0; m < nxh; ++m) {
    const double* xi = x_half_modes_.odd_at(m);
    for (std::size_t j = 0; j < nk; ++j) {
      double xk = 0.0;
      for (int a = 0; a < d; ++a) xk += xi[a] * kc[j * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)];
      spec[m * nk + j] *= std::polar(1.0, -dt * xk);
    }
  }
  xfft_.backward();
  const double inv = 1.0 / xfft_.scale();
  auto out = f.values();
  auto in = xfft_.real();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = in[i] * inv;
}

PhaseField SplitStepKernels::apply_t_eps(const PhaseField& f, const SpatialField& v, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("apply_t_eps: epsilon must be positive");
  to_momentum_dual(f);
  const auto& diff = shifted_difference(v, eps, false);
  auto spec = kfft_.spectrum();
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= cplx(0.0, diff[i] / eps);
  PhaseField out(grid_, f.epsilon(), f.time());
  from_momentum_dual(out);
  return out;
}

PhaseField SplitStepKernels::apply_t_0(const PhaseField& f, const std::vector<SpatialField>& grad_v) {
  const int d = grid_.dim();
  if (static_cast<int>(grad_v.size()) != d) throw std::invalid_argument("apply_t_0: gradient size");
  to_momentum_dual(f);
  auto spec = kfft_.spectrum();
  const std::size_t nyh = kfft_.modes().half;
  for (std::size_t i = 0; i < grid_.x_points(); ++i) {
    for (std::size_t j = 0; j < nyh; ++j) {
      const double* y = y_modes_.odd_at(j);
      double yf = 0.0;
      for (int a = 0; a < d; ++a) yf += y[a] * grad_v[static_cast<std::size_t>(a)][i];
      spec[i * nyh + j] *= cplx(0.0, yf);
    }
  }
  PhaseField out(grid_, f.epsilon(), f.time());
  from_momentum_dual(out);
  return out;
}

PhaseField SplitStepKernels::apply_t_difference(const PhaseField& f, const SpatialField& v, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("apply_t_difference: epsilon must be positive");
  to_momentum_dual(f);
  const auto& diff = shifted_difference(v, eps, true);
  auto spec = kfft_.spectrum();
  for (std::size_t i = 0; i < spec.size(); ++i) spec[i] *= cplx(0.0, diff[i] / eps);
  PhaseField out(grid_, f.epsilon(), f.time());
  from_momentum_dual(out);
  return out;
}

}  // namespace wvlab

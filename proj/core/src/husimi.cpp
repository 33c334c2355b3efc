#include "wvlab/husimi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wvlab/phase_space.hpp"
#include "wvlab/spectral.hpp"
#include "wvlab/vlasov.hpp"

namespace wvlab {

namespace {

double require_eps(const PhaseField& f, const char* who) {
  if (!(f.epsilon() > 0.0)) throw std::invalid_argument(std::string(who) + ": epsilon must be positive");
  return f.epsilon();
}

// exp(-a) - exp(-b) without cancellation when a ~ b.
double exp_difference(double a, double b) {
  if (a <= b) return -std::exp(-a) * std::expm1(-(b - a));
  return std::exp(-b) * std::expm1(-(a - b));
}

}  // namespace

PhaseField gaussian_smooth(const PhaseField& f, double var_x, double var_k) {
  const PhaseGrid& g = f.grid();
  PhaseTransform fft(g);
  std::copy(f.values().begin(), f.values().end(), fft.real().begin());
  fft.forward();
  const ModeTable xm = ModeTable::full(g.dim(), g.nx(), g.lx());
  const ModeTable km(fft.k_modes(), g.lk());
  const std::size_t kh = fft.k_modes().half;
  std::vector<double> kfac(kh);
  for (std::size_t q = 0; q < kh; ++q) kfac[q] = std::exp(-0.5 * var_k * km.even_norm2[q]);
  auto spec = fft.spectrum();
  const double inv = 1.0 / fft.scale();
  for (std::size_t p = 0; p < g.x_points(); ++p) {
    const double xf = std::exp(-0.5 * var_x * xm.even_norm2[p]) * inv;
    for (std::size_t q = 0; q < kh; ++q) spec[p * kh + q] *= xf * kfac[q];
  }
  fft.backward();
  PhaseField out(g, f.epsilon(), f.time());
  std::copy(fft.real().begin(), fft.real().end(), out.values().begin());
  return out;
}

PhaseField husimi_transform(const PhaseField& f) {
  const double eps = require_eps(f, "husimi_transform");
  return gaussian_smooth(f, 0.5 * eps, 0.5 * eps);
}

PhaseField husimi_x(const PhaseField& f) {
  const double eps = require_eps(f, "husimi_x");
  return gaussian_smooth(f, 0.5 * eps, 0.0);
}

PhaseField husimi_k(const PhaseField& f) {
  const double eps = require_eps(f, "husimi_k");
  return gaussian_smooth(f, 0.0, 0.5 * eps);
}

double positivity_defect(const PhaseField& f) { return min_value(f); }

std::pair<double, double> second_moment_shift(const PhaseField& f) {
  return {k_second_moment(f), k_second_moment(husimi_transform(f))};
}

PhaseField error_E1(const PhaseField& fh) {
  const double eps = require_eps(fh, "error_E1");
  const PhaseGrid& g = fh.grid();
  const int d = g.dim();
  PhaseTransform fft(g);
  std::copy(fh.values().begin(), fh.values().end(), fft.real().begin());
  fft.forward();
  const ModeTable xm = ModeTable::full(d, g.nx(), g.lx());
  const ModeTable km(fft.k_modes(), g.lk());
  const std::size_t kh = fft.k_modes().half;
  auto spec = fft.spectrum();
  const double c = 0.5 * eps / fft.scale();
  for (std::size_t p = 0; p < g.x_points(); ++p) {
    for (std::size_t q = 0; q < kh; ++q) {
      double ab = 0.0;
      for (int a = 0; a < d; ++a) ab += xm.odd_at(p)[a] * km.odd_at(q)[a];
      spec[p * kh + q] *= c * ab;
    }
  }
  fft.backward();
  PhaseField out(g, eps, fh.time());
  std::copy(fft.real().begin(), fft.real().end(), out.values().begin());
  return out;
}

PhaseField error_E2(const PhaseField& f, const Potential& phi) {
  const double eps = require_eps(f, "error_E2");
  const PhaseGrid& g = f.grid();
  const int d = g.dim();
  if (phi.dim() != d) throw std::invalid_argument("error_E2: potential dimension mismatch");
  const std::size_t nx = g.nx();
  const std::size_t np = g.x_points();

  PhaseTransform fft(g);
  std::copy(f.values().begin(), f.values().end(), fft.real().begin());
  fft.forward();
  const std::size_t kh = fft.k_modes().half;
  const ModeTable xm = ModeTable::full(d, nx, g.lx());
  const ModeTable km(fft.k_modes(), g.lk());
  std::vector<cplx> fhat(fft.spectrum().begin(), fft.spectrum().end());

  // V_hat on the full x dual; rho_hat(m) = hk^d F_hat(m, q = 0).
  std::vector<cplx> vhat(np);
  double vmax = 0.0;
  for (std::size_t m = 0; m < np; ++m) {
    vhat[m] = phi.fourier(xm.even_norm2[m]) * g.k_cell() * fhat[m * kh];
    vmax = std::max(vmax, std::abs(vhat[m]));
  }
  std::vector<std::size_t> active;
  for (std::size_t m = 0; m < np; ++m)
    if (std::abs(vhat[m]) > 1e-18 * vmax && vmax > 0.0) active.push_back(m);

  // Flat index of (p - m) mod nx on every axis.
  auto minus = [&](std::size_t p, std::size_t m) {
    std::size_t out = 0;
    for (int a = 0; a < d; ++a) {
      const std::size_t ip = axis_index(p, a, d, nx), im = axis_index(m, a, d, nx);
      out = out * nx + (ip + nx - im) % nx;
    }
    return out;
  };

  auto spec = fft.spectrum();
  const double pref = 1.0 / (eps * static_cast<double>(np) * fft.scale());
  for (std::size_t p = 0; p < np; ++p) {
    const double ap2 = xm.even_norm2[p];
    for (std::size_t q = 0; q < kh; ++q) spec[p * kh + q] = 0.0;
    for (std::size_t m : active) {
      const std::size_t pm = minus(p, m);
      const double apm2 = xm.even_norm2[pm];
      const double am2 = xm.even_norm2[m];
      const double* s = xm.odd_at(m);
      for (std::size_t q = 0; q < kh; ++q) {
        const double* b = km.odd_at(q);
        double sb = 0.0;
        for (int a = 0; a < d; ++a) sb += s[a] * b[a];
        const double bq2 = km.even_norm2[q];
        const double w = exp_difference(0.25 * eps * (ap2 + bq2), 0.25 * eps * (bq2 + apm2 + am2));
        // (i/eps) * 2i sin(.) = -(2/eps) sin(.)
        spec[p * kh + q] += (-2.0 * std::sin(0.5 * eps * sb) * w) * vhat[m] * fhat[pm * kh + q];
      }
    }
    for (std::size_t q = 0; q < kh; ++q) spec[p * kh + q] *= pref;
  }
  fft.backward();
  PhaseField out(g, eps, f.time());
  std::copy(fft.real().begin(), fft.real().end(), out.values().begin());
  return out;
}

double cutoff(double k_abs, double m0) {
  const double s = 2.0 * k_abs / m0 - 1.0;
  if (s <= 0.0) return 1.0;
  if (s >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / s);
  const double b = std::exp(-1.0 / (1.0 - s));
  return 1.0 - a / (a + b);
}

SeedReport classical_seed(const PhaseField& f0, double m0) {
  require_eps(f0, "classical_seed");
  if (!(m0 > 0.0)) throw std::invalid_argument("classical_seed: M0 must be positive");
  const PhaseGrid& g = f0.grid();
  const PhaseField ft = husimi_transform(f0);

  std::vector<double> chi(g.k_points());
  for (std::size_t j = 0; j < g.k_points(); ++j) chi[j] = cutoff(std::sqrt(g.k_norm2(j)), m0);

  double total = 0.0, tail = 0.0, kept = 0.0;
  for (std::size_t ix = 0; ix < g.x_points(); ++ix) {
    for (std::size_t ik = 0; ik < g.k_points(); ++ik) {
      const double v = ft.at(ix, ik);
      total += v;
      tail += (1.0 - chi[ik]) * v;
      kept += chi[ik] * v;
    }
  }
  const double w = g.cell_volume();
  total *= w;
  tail *= w;
  kept *= w;
  if (!(kept > 0.0)) throw std::invalid_argument("classical_seed: cut mass is not positive");

  SeedReport r;
  r.normalization = 1.0 / kept;
  r.tail = tail;
  // N - 1 = (1 - kept)/kept with 1 - kept = (1 - total) + tail, keeping the
  // small tail free of the O(1) cancellation.
  r.gap = std::abs((1.0 - total) + tail) / kept;
  r.g0 = PhaseField(g, 0.0, f0.time());
  for (std::size_t ix = 0; ix < g.x_points(); ++ix)
    for (std::size_t ik = 0; ik < g.k_points(); ++ik) r.g0.at(ix, ik) = r.normalization * chi[ik] * ft.at(ix, ik);
  r.l2_distance = l2_norm(f0 - r.g0);
  r.h3_norm = sobolev_norm(r.g0, 3);
  r.support_radius = support_radius(r.g0, 0.0);
  r.min_value = min_value(r.g0);
  return r;
}

}  // namespace wvlab

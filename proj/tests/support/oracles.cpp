#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

using std::numbers::pi;

wvlab::PhaseField sample(const wvlab::PhaseGrid& g, const PhaseFn& fn, double eps) {
  wvlab::PhaseField f(g, eps);
  for (std::size_t i = 0; i < g.nx(); ++i)
    for (std::size_t j = 0; j < g.nk(); ++j) f.at(i, j) = fn(g.x_axis(i), g.k_axis(j));
  return f;
}

double quad(const wvlab::PhaseField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return s * std::pow(f.grid().hx() * f.grid().hk(), f.grid().dim());
}

double quad_l2(const wvlab::PhaseField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v * v;
  return std::sqrt(s * std::pow(f.grid().hx() * f.grid().hk(), f.grid().dim()));
}

double max_diff(const wvlab::PhaseField& a, const wvlab::PhaseField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double rel_l2_diff(const wvlab::PhaseField& a, const wvlab::PhaseField& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += b[i] * b[i];
  }
  return std::sqrt(num / den);
}

double gauss2(double x, double k, double x0, double k0, double vx, double vk) {
  return std::exp(-0.5 * (x - x0) * (x - x0) / vx - 0.5 * (k - k0) * (k - k0) / vk) / (2.0 * pi * std::sqrt(vx * vk));
}

std::vector<double> direct_convolution(const wvlab::PhaseGrid& g, const std::vector<double>& rho,
                                       const std::function<double(double)>& phi) {
  const std::size_t n = g.nx();
  const double L = 2.0 * g.lx();
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double r = g.x_axis(i) - g.x_axis(j);
      r -= L * std::round(r / L);
      v[i] += rho[j] * phi(r) * g.hx();
    }
  }
  return v;
}

wvlab::PhaseField naive_kick(const wvlab::PhaseField& f, const std::function<double(double)>& v, double eps,
                             double dt) {
  const auto& g = f.grid();
  const std::size_t n = g.nk();
  wvlab::PhaseField out(g, f.epsilon(), f.time());
  std::vector<cplx> F(n);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const double x = g.x_axis(i);
    for (std::size_t m = 0; m < n; ++m) {
      const long sm = static_cast<long>(m) - static_cast<long>(n / 2);
      const double y = pi * static_cast<double>(sm) / g.lk();
      cplx s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += f.at(i, j) * std::polar(1.0, -g.k_axis(j) * y);
      const double D = v(x + 0.5 * eps * y) - v(x - 0.5 * eps * y);
      F[m] = s * std::polar(1.0, dt / eps * D);
    }
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t m = 0; m < n; ++m) {
        const long sm = static_cast<long>(m) - static_cast<long>(n / 2);
        s += F[m] * std::polar(1.0, g.k_axis(j) * pi * static_cast<double>(sm) / g.lk());
      }
      out.at(i, j) = s.real() / static_cast<double>(n);
    }
  }
  return out;
}

double naive_wigner(const std::function<cplx(double)>& u, double eps, double x, double k, double y_max, int n) {
  const double hy = 2.0 * y_max / n;
  cplx s = 0.0;
  for (int i = 0; i < n; ++i) {
    const double y = -y_max + i * hy;
    s += std::conj(u(x + 0.5 * eps * y)) * u(x - 0.5 * eps * y) * std::polar(1.0, k * y);
  }
  return s.real() * hy / (2.0 * pi);
}

double wigner_coherent(double x, double k, double x0, double k0, double eps) {
  return std::exp(-((x - x0) * (x - x0) + (k - k0) * (k - k0)) / eps) / (pi * eps);
}

double wigner_excited(double x, double k, double eps) {
  const double r2 = (x * x + k * k) / eps;
  return std::exp(-r2) * (2.0 * r2 - 1.0) / (pi * eps);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::log(x[i]), b = std::log(y[i]);
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260419);
  return gen;
}

}  // namespace oracle

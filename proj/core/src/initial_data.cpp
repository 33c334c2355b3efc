#include "wvlab/initial_data.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wvlab/fit.hpp"
#include "wvlab/husimi.hpp"
#include "wvlab/phase_space.hpp"

namespace wvlab {

double bump(double s, int order) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  const double b = std::exp(-1.0 / q);
  if (order == 0) return b;
  // B = exp(u), u = -1/q.
  const double u1 = -2.0 * s / (q * q);
  if (order == 1) return b * u1;
  const double u2 = -2.0 * (1.0 + 3.0 * s * s) / (q * q * q);
  if (order == 2) return b * (u2 + u1 * u1);
  const double u3 = -24.0 * s * (1.0 + s * s) / (q * q * q * q);
  if (order == 3) return b * (u3 + 3.0 * u1 * u2 + u1 * u1 * u1);
  throw std::invalid_argument("bump: derivative order must be in 0..3");
}

ClassicalProfile::ClassicalProfile(int d, double sigma_x, double k_width)
    : d_(d), sigma_x_(sigma_x), k_width_(k_width) {
  if (d < 1) throw std::invalid_argument("ClassicalProfile: dimension must be >= 1");
  if (!(sigma_x > 0.0) || !(k_width > 0.0)) throw std::invalid_argument("ClassicalProfile: widths must be positive");
}

double ClassicalProfile::value(const double* x, const double* k) const {
  double v = 1.0;
  const double nx = sigma_x_ * kBumpMass, nk = k_width_ * kBumpMass;
  for (int a = 0; a < d_; ++a) v *= bump(x[a] / sigma_x_) / nx * bump(k[a] / k_width_) / nk;
  return v;
}

PhaseField ClassicalProfile::sample(const PhaseGrid& grid) const {
  if (grid.dim() != d_) throw std::invalid_argument("ClassicalProfile::sample: dimension mismatch");
  const auto du = static_cast<std::size_t>(d_);
  std::vector<double> xs(grid.x_points() * du), ks(grid.k_points() * du);
  for (std::size_t i = 0; i < grid.x_points(); ++i)
    for (int a = 0; a < d_; ++a) xs[i * du + static_cast<std::size_t>(a)] = grid.x_coord(i, a);
  for (std::size_t j = 0; j < grid.k_points(); ++j)
    for (int a = 0; a < d_; ++a) ks[j * du + static_cast<std::size_t>(a)] = grid.k_coord(j, a);
  PhaseField f(grid);
  for (std::size_t i = 0; i < grid.x_points(); ++i)
    for (std::size_t j = 0; j < grid.k_points(); ++j) f.at(i, j) = value(&xs[i * du], &ks[j * du]);
  const double mass = integrate(f);
  if (!(mass > 0.0)) throw std::invalid_argument("ClassicalProfile::sample: profile not resolved by the grid");
  f *= 1.0 / mass;
  return f;
}

namespace {

// \int (B^(n))^2 over (-1,1).
double bump_derivative_energy(int n) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate([n](double s) {
    const double v = bump(s, n);
    return v * v;
  }, -1.0, 1.0);
}

void enumerate(int vars, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur.push_back(e);
    enumerate(vars, budget - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

double ClassicalProfile::h3_norm() const {
  double energy[4];
  for (int n = 0; n < 4; ++n) energy[n] = bump_derivative_energy(n);
  // ||d^n b||_2 for b(z) = B(z/w) / (w I0).
  auto axis_norm = [&](int n, double w) {
    return std::sqrt(energy[n] / (kBumpMass * kBumpMass * std::pow(w, 2 * n + 1)));
  };
  std::vector<std::vector<int>> orders;
  std::vector<int> cur;
  enumerate(2 * d_, 3, cur, orders);
  double total = 0.0;
  for (const auto& o : orders) {
    double term = 1.0;
    for (int a = 0; a < d_; ++a) {
      term *= axis_norm(o[static_cast<std::size_t>(a)], sigma_x_);
      term *= axis_norm(o[static_cast<std::size_t>(d_ + a)], k_width_);
    }
    total += term;
  }
  return total;
}

double ClassicalProfile::k_second_moment() const {
  boost::math::quadrature::tanh_sinh<double> q;
  const double s2 = q.integrate([](double s) { return s * s * bump(s); }, -1.0, 1.0) / kBumpMass;
  return d_ * k_width_ * k_width_ * s2;
}

ClassicalProfile default_profile(double m0, int d, double sigma_x) {
  if (!(m0 > 0.0)) throw std::invalid_argument("default_profile: M0 must be positive");
  return ClassicalProfile(d, sigma_x, 0.5 * m0);
}

PhaseField coherent_mixture(const ClassicalProfile& profile, const PhaseGrid& grid, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("coherent_mixture: epsilon must be positive");
  if (profile.sigma_x() >= grid.lx() || profile.k_width() >= grid.lk())
    throw std::invalid_argument("coherent_mixture: profile support escapes the grid");
  PhaseField f = gaussian_smooth(profile.sample(grid), 0.5 * eps, 0.5 * eps);
  f.set_epsilon(eps);
  return f;
}

Admissibility admissibility(const PhaseField& f0, double m0) {
  const PhaseGrid& g = f0.grid();
  Admissibility a;
  a.eps = f0.epsilon();
  a.mass = integrate(f0);
  a.h3_norm = sobolev_norm(f0, 3);
  a.k_second_moment = k_second_moment(f0);
  a.l1_norm = l1_norm(f0);
  a.boundary_mass = boundary_mass(f0);
  double t2 = 0.0, t1 = 0.0;
  for (std::size_t ik = 0; ik < g.k_points(); ++ik) {
    const double kr = std::sqrt(g.k_norm2(ik));
    const bool far = kr > 0.5 * m0, mid = kr > 0.25 * m0;
    if (!far && !mid) continue;
    for (std::size_t ix = 0; ix < g.x_points(); ++ix) {
      const double v = f0.at(ix, ik);
      if (far) t2 += v * v;
      if (mid) t1 += std::abs(v);
    }
  }
  a.tail_l2 = t2 * g.cell_volume();
  a.tail_l1 = t1 * g.cell_volume();
  return a;
}

namespace {

// A tail passes if it is negligible everywhere or decays at least at the
// required rate (0.1 slack on the fitted exponent).
bool tail_ok(const std::vector<double>& eps, const std::vector<double>& tail, double rate, double floor,
             double& slope) {
  slope = std::numeric_limits<double>::quiet_NaN();
  if (std::all_of(tail.begin(), tail.end(), [&](double t) { return t <= floor; })) return true;
  if (eps.size() < 2 || std::any_of(tail.begin(), tail.end(), [](double t) { return !(t > 0.0); })) return false;
  slope = fit_loglog(eps, tail).slope;
  return slope >= rate - 0.1;
}

}  // namespace

AdmissibilityReport admissibility_report(const std::vector<PhaseField>& family, double m0, double alpha,
                                         double h3_reference) {
  AdmissibilityReport r;
  r.m0 = m0;
  r.alpha = alpha;
  std::vector<double> eps, t2, t1, h3;
  for (const auto& f : family) {
    r.entries.push_back(admissibility(f, m0));
    eps.push_back(r.entries.back().eps);
    t2.push_back(r.entries.back().tail_l2);
    t1.push_back(r.entries.back().tail_l1);
    h3.push_back(r.entries.back().h3_norm);
  }
  r.mass_ok = std::all_of(r.entries.begin(), r.entries.end(),
                          [](const Admissibility& a) { return std::abs(a.mass - 1.0) <= 1e-10; });
  if (!h3.empty()) {
    r.h3_reference = std::isnan(h3_reference) ? *std::min_element(h3.begin(), h3.end()) : h3_reference;
    r.h3_uniform = *std::max_element(h3.begin(), h3.end()) <= 1.05 * r.h3_reference;
  }
  r.tail_l2_ok = tail_ok(eps, t2, 2.0 * alpha, 1e-24, r.tail_l2_slope);
  r.tail_l1_ok = tail_ok(eps, t1, alpha, 1e-12, r.tail_l1_slope);
  return r;
}

}  // namespace wvlab

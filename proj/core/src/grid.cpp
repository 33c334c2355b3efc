#include "wvlab/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wvlab {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

PhaseGrid::PhaseGrid(int d, std::size_t nx, std::size_t nk, double lx, double lk)
    : d_(d), nx_(nx), nk_(nk), lx_(lx), lk_(lk), x_points_(ipow(nx, d)), k_points_(ipow(nk, d)) {}

double PhaseGrid::x_cell() const { return std::pow(hx(), d_); }
double PhaseGrid::k_cell() const { return std::pow(hk(), d_); }

double PhaseGrid::x_coord(std::size_t flat, int axis) const {
  return x_axis(axis_index(flat, axis, d_, nx_));
}

double PhaseGrid::k_coord(std::size_t flat, int axis) const {
  return k_axis(axis_index(flat, axis, d_, nk_));
}

double PhaseGrid::k_norm2(std::size_t flat) const {
  double s = 0.0;
  for (int a = 0; a < d_; ++a) {
    const double k = k_coord(flat, a);
    s += k * k;
  }
  return s;
}

double PhaseGrid::x_norm2(std::size_t flat) const {
  double s = 0.0;
  for (int a = 0; a < d_; ++a) {
    const double x = x_coord(flat, a);
    s += x * x;
  }
  return s;
}

bool PhaseGrid::operator==(const PhaseGrid& o) const {
  return d_ == o.d_ && nx_ == o.nx_ && nk_ == o.nk_ && lx_ == o.lx_ && lk_ == o.lk_;
}

PhaseGrid make_grid(int d, std::size_t nx, std::size_t nk, double lx, double lk) {
  if (d < 1 || d > 3) throw std::invalid_argument("make_grid: dimension must be 1, 2 or 3");
  if (!is_power_of_two(nx) || nx < 8)
    throw std::invalid_argument("make_grid: nx must be a power of two >= 8, got " + std::to_string(nx));
  if (!is_power_of_two(nk) || nk < 8)
    throw std::invalid_argument("make_grid: nk must be a power of two >= 8, got " + std::to_string(nk));
  if (!(lx > 0.0) || !(lk > 0.0) || !std::isfinite(lx) || !std::isfinite(lk))
    throw std::invalid_argument("make_grid: extents must be positive and finite");
  return PhaseGrid(d, nx, nk, lx, lk);
}

HalfSpectrum::HalfSpectrum(int dim, std::size_t length) : d(dim), n(length) {
  full = ipow(n, d);
  half = ipow(n, d - 1) * (n / 2 + 1);
}

ModeTable::ModeTable(const HalfSpectrum& shape, double half_width) : d(shape.d) {
  const auto du = static_cast<std::size_t>(d);
  odd.resize(shape.half * du);
  even.resize(shape.half * du);
  even_norm2.resize(shape.half);
  for (std::size_t m = 0; m < shape.half; ++m) {
    double s2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const std::size_t i = shape.index(m, a);
      const double w = wavenumber(i, shape.n, half_width);
      even[m * du + static_cast<std::size_t>(a)] = w;
      odd[m * du + static_cast<std::size_t>(a)] = odd_wavenumber(i, shape.n, half_width);
      s2 += w * w;
    }
    even_norm2[m] = s2;
  }
}

ModeTable ModeTable::full(int d, std::size_t n, double half_width) {
  ModeTable t;
  t.d = d;
  const auto du = static_cast<std::size_t>(d);
  const std::size_t total = ipow(n, d);
  t.odd.resize(total * du);
  t.even.resize(total * du);
  t.even_norm2.resize(total);
  for (std::size_t m = 0; m < total; ++m) {
    double s2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const std::size_t i = axis_index(m, a, d, n);
      const double w = wavenumber(i, n, half_width);
      t.even[m * du + static_cast<std::size_t>(a)] = w;
      t.odd[m * du + static_cast<std::size_t>(a)] = odd_wavenumber(i, n, half_width);
      s2 += w * w;
    }
    t.even_norm2[m] = s2;
  }
  return t;
}

}  // namespace wvlab

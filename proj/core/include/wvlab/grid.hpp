#pragma once

#include <cstddef>
#include <vector>

namespace wvlab {

/// Uniform periodic tensor grid on [-lx, lx)^d x [-lk, lk)^d.
///
/// Phase-space points are stored row-major with the x-axes first and the
/// k-axes fastest-varying, so a field is a stack of nx^d contiguous k-rows of
/// length nk^d.
class PhaseGrid {
 public:
  PhaseGrid() = default;
  PhaseGrid(int d, std::size_t nx, std::size_t nk, double lx, double lk);

  int dim() const { return d_; }
  std::size_t nx() const { return nx_; }
  std::size_t nk() const { return nk_; }
  double lx() const { return lx_; }
  double lk() const { return lk_; }
  double hx() const { return 2.0 * lx_ / static_cast<double>(nx_); }
  double hk() const { return 2.0 * lk_ / static_cast<double>(nk_); }

  /// nx^d and nk^d.
  std::size_t x_points() const { return x_points_; }
  std::size_t k_points() const { return k_points_; }
  std::size_t size() const { return x_points_ * k_points_; }

  /// hx^d and hk^d.
  double x_cell() const;
  double k_cell() const;
  double cell_volume() const { return x_cell() * k_cell(); }

  /// Coordinate along one axis.
  double x_axis(std::size_t i) const { return -lx_ + static_cast<double>(i) * hx(); }
  double k_axis(std::size_t j) const { return -lk_ + static_cast<double>(j) * hk(); }

  /// Coordinate `axis` (0..d-1) of the flat x (resp. k) multi-index.
  double x_coord(std::size_t flat, int axis) const;
  double k_coord(std::size_t flat, int axis) const;
  double k_norm2(std::size_t flat) const;
  double x_norm2(std::size_t flat) const;

  bool operator==(const PhaseGrid& other) const;
  bool operator!=(const PhaseGrid& other) const { return !(*this == other); }

 private:
  int d_ = 0;
  std::size_t nx_ = 0, nk_ = 0;
  double lx_ = 0.0, lk_ = 0.0;
  std::size_t x_points_ = 0, k_points_ = 0;
};

/// Validating constructor; throws std::invalid_argument on non-power-of-two
/// sizes below 8, non-positive extents, or d outside 1..3.
PhaseGrid make_grid(int d, std::size_t nx, std::size_t nk, double lx, double lk);

bool is_power_of_two(std::size_t n);

/// DFT index -> signed mode number in [-n/2, n/2).
inline long signed_mode(std::size_t index, std::size_t n) {
  const long i = static_cast<long>(index);
  const long half = static_cast<long>(n / 2);
  return i < half ? i : i - static_cast<long>(n);
}

/// Angular wavenumber pi*m/half_width of a DFT index on a box of period
/// 2*half_width. The Nyquist index keeps its value -pi*n/(2*half_width); use
/// this for even symbols (Gaussians, squared frequencies).
inline double wavenumber(std::size_t index, std::size_t n, double half_width) {
  constexpr double kPi = 3.141592653589793238462643383279502884;
  return kPi * static_cast<double>(signed_mode(index, n)) / half_width;
}

/// Same as wavenumber() but the Nyquist index maps to zero. Odd symbols
/// (derivatives, shifts) use this so that real fields stay real.
inline double odd_wavenumber(std::size_t index, std::size_t n, double half_width) {
  if (2 * index == n) return 0.0;
  return wavenumber(index, n, half_width);
}

/// Unflatten a row-major multi-index of `d` axes of length n each.
/// Axis d-1 is fastest.
inline std::size_t axis_index(std::size_t flat, int axis, int d, std::size_t n) {
  for (int a = d - 1; a > axis; --a) flat /= n;
  return flat % n;
}

/// Shape bookkeeping for half-complex (r2c) spectra of a block of `d` axes of
/// length n: the last axis is truncated to n/2+1 modes.
struct HalfSpectrum {
  int d = 0;
  std::size_t n = 0;
  std::size_t full = 0;  // n^d
  std::size_t half = 0;  // n^(d-1) * (n/2+1)

  HalfSpectrum() = default;
  HalfSpectrum(int dim, std::size_t length);

  /// Axis index of a flat half-spectrum index.
  std::size_t index(std::size_t flat, int axis) const {
    const std::size_t last = n / 2 + 1;
    if (axis == d - 1) return flat % last;
    flat /= last;
    for (int a = d - 2; a > axis; --a) flat /= n;
    return flat % n;
  }
};

/// Precomputed wavenumber vectors (d components per mode) of a half-complex
/// spectrum, in odd (Nyquist -> 0) and even conventions.
struct ModeTable {
  int d = 0;
  std::vector<double> odd;   // size half * d
  std::vector<double> even;  // size half * d
  std::vector<double> even_norm2;

  ModeTable() = default;
  ModeTable(const HalfSpectrum& shape, double half_width);
  /// Full (not half) spectrum of `d` axes.
  static ModeTable full(int d, std::size_t n, double half_width);

  std::size_t size() const { return even_norm2.size(); }
  const double* odd_at(std::size_t m) const { return odd.data() + m * static_cast<std::size_t>(d); }
  const double* even_at(std::size_t m) const { return even.data() + m * static_cast<std::size_t>(d); }
};

}  // namespace wvlab

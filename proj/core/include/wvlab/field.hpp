#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wvlab/grid.hpp"

namespace wvlab {

/// Real scalar field on a PhaseGrid (Wigner functions, Vlasov densities,
/// Husimi transforms, residuals). epsilon == 0 marks a classical field.
class PhaseField {
 public:
  PhaseField() = default;
  explicit PhaseField(PhaseGrid grid, double epsilon = 0.0, double time = 0.0);
  PhaseField(PhaseGrid grid, std::vector<double> values, double epsilon = 0.0, double time = 0.0);

  const PhaseGrid& grid() const { return grid_; }
  double epsilon() const { return epsilon_; }
  double time() const { return time_; }
  void set_epsilon(double eps) { epsilon_ = eps; }
  void set_time(double t) { time_ = t; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  /// Flat x multi-index, flat k multi-index.
  double& at(std::size_t ix, std::size_t ik) { return values_[ix * grid_.k_points() + ik]; }
  double at(std::size_t ix, std::size_t ik) const { return values_[ix * grid_.k_points() + ik]; }

  PhaseField& operator+=(const PhaseField& other);
  PhaseField& operator-=(const PhaseField& other);
  PhaseField& operator*=(double s);

  bool all_finite() const;

 private:
  PhaseGrid grid_;
  std::vector<double> values_;
  double epsilon_ = 0.0;
  double time_ = 0.0;
};

PhaseField operator-(PhaseField a, const PhaseField& b);
PhaseField operator+(PhaseField a, const PhaseField& b);
PhaseField operator*(double s, PhaseField a);

/// Real field on the spatial part of a PhaseGrid (densities, potentials).
struct SpatialField {
  PhaseGrid grid;
  std::vector<double> values;

  SpatialField() = default;
  explicit SpatialField(PhaseGrid g) : grid(std::move(g)), values(grid.x_points(), 0.0) {}
  SpatialField(PhaseGrid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {}

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
};

/// Quadrature integral over the spatial grid.
double integrate(const SpatialField& f);

}  // namespace wvlab

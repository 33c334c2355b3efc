#include "wvlab/field.hpp"

#include <cmath>
#include <stdexcept>

namespace wvlab {

PhaseField::PhaseField(PhaseGrid grid, double epsilon, double time)
    : grid_(std::move(grid)), values_(grid_.size(), 0.0), epsilon_(epsilon), time_(time) {}

PhaseField::PhaseField(PhaseGrid grid, std::vector<double> values, double epsilon, double time)
    : grid_(std::move(grid)), values_(std::move(values)), epsilon_(epsilon), time_(time) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("PhaseField: value count does not match grid size");
}

PhaseField& PhaseField::operator+=(const PhaseField& other) {
  if (other.grid_ != grid_) throw std::invalid_argument("PhaseField: grid mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

PhaseField& PhaseField::operator-=(const PhaseField& other) {
  if (other.grid_ != grid_) throw std::invalid_argument("PhaseField: grid mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

PhaseField& PhaseField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

bool PhaseField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

PhaseField operator-(PhaseField a, const PhaseField& b) { return a -= b; }
PhaseField operator+(PhaseField a, const PhaseField& b) { return a += b; }
PhaseField operator*(double s, PhaseField a) { return a *= s; }

double integrate(const SpatialField& f) {
  double s = 0.0;
  for (double v : f.values) s += v;
  return s * f.grid.x_cell();
}

}  // namespace wvlab

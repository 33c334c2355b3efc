#pragma once

// Quadrature, norms and binary I/O on phase-space fields.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "wvlab/field.hpp"
#include "wvlab/grid.hpp"

namespace wvlab {

/// Rectangle-rule integral: sum(values) * hx^d * hk^d.
double integrate(const PhaseField& f);

double l2_norm(const PhaseField& f);
double l1_norm(const PhaseField& f);
double max_abs(const PhaseField& f);
double min_value(const PhaseField& f);
double max_value(const PhaseField& f);

/// Sum of L2 norms of all spectral derivatives of total order <= m over the
/// 2d phase-space variables. m = 0 is l2_norm. Throws for m outside 0..3.
double sobolev_norm(const PhaseField& f, int m);

/// Integral of |f| over the outer `shell` fraction of the box (any coordinate
/// beyond (1-shell) of its half-width). Flags truncation trouble.
double boundary_mass(const PhaseField& f, double shell = 0.1);

/// Integral of |k|^2 f.
double k_second_moment(const PhaseField& f);

/// Raised for any malformed field file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr char kFieldMagic[4] = {'W', 'V', 'F', '1'};
inline constexpr std::uint32_t kFieldVersion = 1;

/// Writes the little-endian WVF1 container: magic, version u32, d u32, nx u64,
/// nk u64, lx lk epsilon time f64, then row-major f64 values (k fastest).
void dump(const PhaseField& f, const std::filesystem::path& path);
PhaseField load(const std::filesystem::path& path);

}  // namespace wvlab

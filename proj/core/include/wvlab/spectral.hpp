#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

#include "wvlab/grid.hpp"

namespace wvlab {

using cplx = std::complex<double>;

namespace detail {

struct FftwFree {
  void operator()(void* p) const;
};

struct PlanHandle;

/// Owning, move-only FFTW plan. Creation and destruction are serialized
/// behind a process-wide mutex; execution is not.
class Plan {
 public:
  Plan() = default;
  explicit Plan(PlanHandle* p);
  Plan(Plan&&) noexcept;
  Plan& operator=(Plan&&) noexcept;
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan();

  void execute() const;

 private:
  PlanHandle* handle_ = nullptr;
};

double* alloc_real(std::size_t n);
cplx* alloc_complex(std::size_t n);

}  // namespace detail

/// Scratch pair (real array, half-complex spectrum) with forward r2c and
/// backward c2r plans between them. Transforms are unnormalized; backward
/// overwrites the spectrum.
class RealTransform {
 public:
  std::span<double> real() { return {real_.get(), real_size_}; }
  std::span<const double> real() const { return {real_.get(), real_size_}; }
  std::span<cplx> spectrum() { return {spec_.get(), spec_size_}; }
  std::span<const cplx> spectrum() const { return {spec_.get(), spec_size_}; }

  void forward() const { forward_.execute(); }
  void backward() const { backward_.execute(); }

  /// Product of transformed axis lengths (normalization of a round trip).
  double scale() const { return scale_; }

 protected:
  RealTransform() = default;
  void allocate(std::size_t real_size, std::size_t spec_size);

  std::unique_ptr<double, detail::FftwFree> real_;
  std::unique_ptr<cplx, detail::FftwFree> spec_;
  std::size_t real_size_ = 0, spec_size_ = 0;
  detail::Plan forward_, backward_;
  double scale_ = 1.0;
};

/// Transform over the k-axes of every x-row: f(x,k) <-> F(x,y), y in the
/// half spectrum of the k-block.
class KAxesTransform : public RealTransform {
 public:
  explicit KAxesTransform(const PhaseGrid& grid);
  const HalfSpectrum& modes() const { return modes_; }

 private:
  HalfSpectrum modes_;
};

/// Transform over the x-axes of `columns` interleaved columns: real layout
/// [x][column], spectrum layout [xi half][column].
class XAxesTransform : public RealTransform {
 public:
  XAxesTransform(const PhaseGrid& grid, std::size_t columns);
  const HalfSpectrum& modes() const { return modes_; }
  std::size_t columns() const { return columns_; }

 private:
  HalfSpectrum modes_;
  std::size_t columns_;
};

/// Transform over all 2d phase-space axes. Spectrum layout [x modes (full)][k
/// modes (half)].
class PhaseTransform : public RealTransform {
 public:
  explicit PhaseTransform(const PhaseGrid& grid);
  const HalfSpectrum& k_modes() const { return k_modes_; }

 private:
  HalfSpectrum k_modes_;
};

/// Transform of a spatial (x-only) real field.
class SpatialTransform : public RealTransform {
 public:
  explicit SpatialTransform(const PhaseGrid& grid);
  const HalfSpectrum& modes() const { return modes_; }

 private:
  HalfSpectrum modes_;
};

/// In-place complex transform of a spatial field (wavefunctions).
class SpatialComplexTransform {
 public:
  explicit SpatialComplexTransform(const PhaseGrid& grid);

  std::span<cplx> data() { return {data_.get(), size_}; }
  void forward() const { forward_.execute(); }
  void backward() const { backward_.execute(); }
  double scale() const { return static_cast<double>(size_); }

 private:
  std::unique_ptr<cplx, detail::FftwFree> data_;
  std::size_t size_ = 0;
  detail::Plan forward_, backward_;
};

}  // namespace wvlab

#include "wvlab/spectral.hpp"

#include <fftw3.h>

#include <mutex>
#include <new>
#include <stdexcept>
#include <vector>

namespace wvlab {

namespace detail {

namespace {

// FFTW's planner is not thread safe. Recursive so a failed plan can be
// destroyed while the lock is held.
std::recursive_mutex& planner_mutex() {
  static std::recursive_mutex m;
  return m;
}

constexpr unsigned kFlags = FFTW_ESTIMATE;

}  // namespace

struct PlanHandle {
  fftw_plan plan;
};

void FftwFree::operator()(void* p) const { fftw_free(p); }

Plan::Plan(PlanHandle* p) : handle_(p) {
  if (handle_ == nullptr || handle_->plan == nullptr) {
    delete handle_;
    handle_ = nullptr;
    throw std::runtime_error("FFTW plan creation failed");
  }
}

Plan::Plan(Plan&& o) noexcept : handle_(o.handle_) { o.handle_ = nullptr; }

Plan& Plan::operator=(Plan&& o) noexcept {
  if (this != &o) {
    this->~Plan();
    handle_ = o.handle_;
    o.handle_ = nullptr;
  }
  return *this;
}

Plan::~Plan() {
  if (handle_ != nullptr) {
    std::lock_guard<std::recursive_mutex> lock(planner_mutex());
    fftw_destroy_plan(handle_->plan);
    delete handle_;
    handle_ = nullptr;
  }
}

void Plan::execute() const { fftw_execute(handle_->plan); }

double* alloc_real(std::size_t n) {
  auto* p = static_cast<double*>(fftw_malloc(sizeof(double) * n));
  if (p == nullptr) throw std::bad_alloc();
  for (std::size_t i = 0; i < n; ++i) p[i] = 0.0;
  return p;
}

cplx* alloc_complex(std::size_t n) {
  auto* p = static_cast<cplx*>(fftw_malloc(sizeof(cplx) * n));
  if (p == nullptr) throw std::bad_alloc();
  for (std::size_t i = 0; i < n; ++i) p[i] = 0.0;
  return p;
}

namespace {

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

// Plans one r2c/c2r pair over `rank` axes of lengths `dims`, batched `howmany`
// times with the given stride/distance on both sides.
std::pair<Plan, Plan> plan_many(const std::vector<int>& dims, int howmany, double* real, int rstride,
                                int rdist, cplx* spec, int sstride, int sdist) {
  std::lock_guard<std::recursive_mutex> lock(planner_mutex());
  const int rank = static_cast<int>(dims.size());
  fftw_plan fwd = fftw_plan_many_dft_r2c(rank, dims.data(), howmany, real, nullptr, rstride, rdist,
                                         as_fftw(spec), nullptr, sstride, sdist, kFlags);
  fftw_plan bwd = fftw_plan_many_dft_c2r(rank, dims.data(), howmany, as_fftw(spec), nullptr, sstride,
                                         sdist, real, nullptr, rstride, rdist, kFlags);
  return {Plan(new PlanHandle{fwd}), Plan(new PlanHandle{bwd})};
}

}  // namespace

}  // namespace detail

void RealTransform::allocate(std::size_t real_size, std::size_t spec_size) {
  real_size_ = real_size;
  spec_size_ = spec_size;
  real_.reset(detail::alloc_real(real_size));
  spec_.reset(detail::alloc_complex(spec_size));
}

KAxesTransform::KAxesTransform(const PhaseGrid& grid) : modes_(grid.dim(), grid.nk()) {
  const auto rows = grid.x_points();
  allocate(rows * modes_.full, rows * modes_.half);
  std::vector<int> dims(static_cast<std::size_t>(grid.dim()), static_cast<int>(grid.nk()));
  auto plans = detail::plan_many(dims, static_cast<int>(rows), real_.get(), 1,
                                 static_cast<int>(modes_.full), spec_.get(), 1,
                                 static_cast<int>(modes_.half));
  forward_ = std::move(plans.first);
  backward_ = std::move(plans.second);
  scale_ = static_cast<double>(modes_.full);
}

XAxesTransform::XAxesTransform(const PhaseGrid& grid, std::size_t columns)
    : modes_(grid.dim(), grid.nx()), columns_(columns) {
  allocate(modes_.full * columns, modes_.half * columns);
  std::vector<int> dims(static_cast<std::size_t>(grid.dim()), static_cast<int>(grid.nx()));
  const int c = static_cast<int>(columns);
  auto plans = detail::plan_many(dims, c, real_.get(), c, 1, spec_.get(), c, 1);
  forward_ = std::move(plans.first);
  backward_ = std::move(plans.second);
  scale_ = static_cast<double>(modes_.full);
}

PhaseTransform::PhaseTransform(const PhaseGrid& grid) : k_modes_(grid.dim(), grid.nk()) {
  allocate(grid.size(), grid.x_points() * k_modes_.half);
  std::vector<int> dims;
  for (int a = 0; a < grid.dim(); ++a) dims.push_back(static_cast<int>(grid.nx()));
  for (int a = 0; a < grid.dim(); ++a) dims.push_back(static_cast<int>(grid.nk()));
  auto plans = detail::plan_many(dims, 1, real_.get(), 1, 0, spec_.get(), 1, 0);
  forward_ = std::move(plans.first);
  backward_ = std::move(plans.second);
  scale_ = static_cast<double>(grid.size());
}

SpatialTransform::SpatialTransform(const PhaseGrid& grid) : modes_(grid.dim(), grid.nx()) {
  allocate(modes_.full, modes_.half);
  std::vector<int> dims(static_cast<std::size_t>(grid.dim()), static_cast<int>(grid.nx()));
  auto plans = detail::plan_many(dims, 1, real_.get(), 1, 0, spec_.get(), 1, 0);
  forward_ = std::move(plans.first);
  backward_ = std::move(plans.second);
  scale_ = static_cast<double>(modes_.full);
}

SpatialComplexTransform::SpatialComplexTransform(const PhaseGrid& grid) : size_(grid.x_points()) {
  data_.reset(detail::alloc_complex(size_));
  std::vector<int> dims(static_cast<std::size_t>(grid.dim()), static_cast<int>(grid.nx()));
  std::lock_guard<std::recursive_mutex> lock(detail::planner_mutex());
  auto* p = detail::as_fftw(data_.get());
  const int rank = grid.dim();
  fftw_plan fwd = fftw_plan_dft(rank, dims.data(), p, p, FFTW_FORWARD, detail::kFlags);
  fftw_plan bwd = fftw_plan_dft(rank, dims.data(), p, p, FFTW_BACKWARD, detail::kFlags);
  forward_ = detail::Plan(new detail::PlanHandle{fwd});
  backward_ = detail::Plan(new detail::PlanHandle{bwd});
}

}  // namespace wvlab

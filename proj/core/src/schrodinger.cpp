#include "wvlab/schrodinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wvlab/phase_space.hpp"
#include "wvlab/wigner.hpp"

namespace wvlab {

void OrbitalEnsemble::validate() const {
  if (!(eps > 0.0)) throw std::invalid_argument("OrbitalEnsemble: epsilon must be positive");
  if (orbitals.empty() || orbitals.size() != weights.size())
    throw std::invalid_argument("OrbitalEnsemble: need one weight per orbital");
  double wsum = 0.0;
  for (std::size_t m = 0; m < orbitals.size(); ++m) {
    if (orbitals[m].size() != grid.x_points()) throw std::invalid_argument("OrbitalEnsemble: orbital size mismatch");
    if (!(weights[m] >= 0.0)) throw std::invalid_argument("OrbitalEnsemble: weights must be nonnegative");
    const double n = orbital_norm(grid, orbitals[m]);
    if (std::abs(n - 1.0) > 1e-10)
      throw std::invalid_argument("OrbitalEnsemble: orbital " + std::to_string(m) + " has norm " + std::to_string(n));
    wsum += weights[m];
  }
  if (std::abs(wsum - 1.0) > 1e-12) throw std::invalid_argument("OrbitalEnsemble: weights must sum to 1");
}

SpatialField OrbitalEnsemble::density() const {
  SpatialField rho(grid);
  for (std::size_t m = 0; m < orbitals.size(); ++m)
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] += weights[m] * std::norm(orbitals[m][i]);
  return rho;
}

double orbital_norm(const PhaseGrid& grid, std::span<const cplx> u) {
  double s = 0.0;
  for (const cplx& z : u) s += std::norm(z);
  return std::sqrt(s * grid.x_cell());
}

std::vector<cplx> coherent_state(const PhaseGrid& grid, double eps, std::span<const double> x0,
                                 std::span<const double> k0) {
  const int d = grid.dim();
  if (!(eps > 0.0)) throw std::invalid_argument("coherent_state: epsilon must be positive");
  if (static_cast<int>(x0.size()) != d || static_cast<int>(k0.size()) != d)
    throw std::invalid_argument("coherent_state: centre has the wrong dimension");
  const double amp = std::pow(std::numbers::pi * eps, -0.25 * d);
  std::vector<cplx> u(grid.x_points());
  for (std::size_t i = 0; i < u.size(); ++i) {
    double r2 = 0.0, phase = 0.0;
    for (int a = 0; a < d; ++a) {
      const double x = grid.x_coord(i, a);
      r2 += (x - x0[static_cast<std::size_t>(a)]) * (x - x0[static_cast<std::size_t>(a)]);
      phase += k0[static_cast<std::size_t>(a)] * x;
    }
    u[i] = amp * std::exp(-0.5 * r2 / eps) * std::polar(1.0, phase / eps);
  }
  return u;
}

std::vector<cplx> excited_state(const PhaseGrid& grid, double eps) {
  const std::vector<double> zero(static_cast<std::size_t>(grid.dim()), 0.0);
  auto u = coherent_state(grid, eps, zero, zero);
  const double c = std::sqrt(2.0 / eps);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] *= c * grid.x_coord(i, 0);
  return u;
}

NlsSolver::NlsSolver(OrbitalEnsemble ens, Potential phi, double dt, SplitOrder order)
    : ens_(std::move(ens)), phi_(std::move(phi)), dt_(dt), order_(order) {
  ens_.validate();
  if (!(dt_ > 0.0)) throw std::invalid_argument("NlsSolver: dt must be positive");
  if (phi_.dim() != ens_.grid.dim()) throw std::invalid_argument("NlsSolver: potential dimension mismatch");
  fft_ = std::make_unique<SpatialComplexTransform>(ens_.grid);
  const ModeTable modes = ModeTable::full(ens_.grid.dim(), ens_.grid.nx(), ens_.grid.lx());
  xi2_ = modes.even_norm2;
}

NlsSolver::~NlsSolver() = default;
NlsSolver::NlsSolver(NlsSolver&&) noexcept = default;
NlsSolver& NlsSolver::operator=(NlsSolver&&) noexcept = default;

void NlsSolver::kinetic(double dt) {
  auto data = fft_->data();
  const double inv = 1.0 / fft_->scale();
  const double c = -0.5 * dt * ens_.eps;
  for (auto& u : ens_.orbitals) {
    std::copy(u.begin(), u.end(), data.begin());
    fft_->forward();
    for (std::size_t i = 0; i < data.size(); ++i) data[i] *= std::polar(inv, c * xi2_[i]);
    fft_->backward();
    std::copy(data.begin(), data.end(), u.begin());
  }
}

void NlsSolver::potential(double dt) {
  const SpatialField v = hartree_field(ens_.density(), phi_).potential;
  std::vector<cplx> phase(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) phase[i] = std::polar(1.0, -dt * v[i] / ens_.eps);
  for (auto& u : ens_.orbitals)
    for (std::size_t i = 0; i < u.size(); ++i) u[i] *= phase[i];
}

void NlsSolver::step() {
  if (order_ == SplitOrder::PotentialFirst) {
    potential(0.5 * dt_);
    kinetic(dt_);
    potential(0.5 * dt_);
  } else {
    kinetic(0.5 * dt_);
    potential(dt_);
    kinetic(0.5 * dt_);
  }
  time_ += dt_;
  for (const auto& u : ens_.orbitals)
    for (const cplx& z : u)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw NumericalBlowup("NlsSolver: non-finite orbital at t = " + std::to_string(time_));
}

void NlsSolver::advance_to(double t_end) {
  const auto n = static_cast<long>(std::llround((t_end - time_) / dt_));
  for (long i = 0; i < n; ++i) step();
}

double NlsSolver::energy() {
  auto data = fft_->data();
  double kin = 0.0;
  for (std::size_t m = 0; m < ens_.orbitals.size(); ++m) {
    std::copy(ens_.orbitals[m].begin(), ens_.orbitals[m].end(), data.begin());
    fft_->forward();
    double s = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) s += xi2_[i] * std::norm(data[i]);
    // Parseval: hx^d sum |grad u|^2 = hx^d / N sum |xi|^2 |u_hat|^2.
    kin += ens_.weights[m] * 0.5 * ens_.eps * ens_.eps * s * ens_.grid.x_cell() / fft_->scale();
  }
  const SpatialField rho = ens_.density();
  const SpatialField v = hartree_field(rho, phi_).potential;
  double pot = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) pot += rho[i] * v[i];
  return kin + 0.5 * pot * ens_.grid.x_cell();
}

OrbitalEnsemble nls_step(const OrbitalEnsemble& ens, const Potential& phi, double dt, SplitOrder order) {
  NlsSolver s(ens, phi, dt, order);
  s.step();
  return s.ensemble();
}

PhaseField wigner_of_ensemble(const OrbitalEnsemble& ens) {
  ens.validate();
  const PhaseGrid& g = ens.grid;
  const int d = g.dim();
  KAxesTransform kfft(g);
  const HalfSpectrum& ymodes = kfft.modes();
  // True (even-convention) y values, Nyquist included: W is sampled there.
  const ModeTable ytab(ymodes, g.lk());
  const ModeTable xi = ModeTable::full(d, g.nx(), g.lx());
  const std::size_t nyh = ymodes.half;
  const std::size_t np = g.x_points();

  SpatialComplexTransform fft(g);
  auto data = fft.data();
  std::vector<std::vector<cplx>> uhat;
  for (const auto& u : ens.orbitals) {
    std::copy(u.begin(), u.end(), data.begin());
    fft.forward();
    uhat.emplace_back(data.begin(), data.end());
  }

  auto spec = kfft.spectrum();
  std::fill(spec.begin(), spec.end(), cplx(0.0));
  std::vector<cplx> plus(np), minus(np);
  const double inv = 1.0 / fft.scale();
  for (std::size_t j = 0; j < nyh; ++j) {
    const double* y = ytab.even_at(j);
    long msum = 0;
    for (int a = 0; a < d; ++a) msum += static_cast<long>(ymodes.index(j, a));
    const double sign = (msum % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t m = 0; m < ens.orbitals.size(); ++m) {
      // u(x + s) and u(x - s), s = eps y / 2.
      for (int pass = 0; pass < 2; ++pass) {
        const double sgn = pass == 0 ? 1.0 : -1.0;
        for (std::size_t p = 0; p < np; ++p) {
          double phase = 0.0;
          for (int a = 0; a < d; ++a) phase += xi.odd_at(p)[a] * y[a];
          data[p] = uhat[m][p] * std::polar(inv, sgn * 0.5 * ens.eps * phase);
        }
        fft.backward();
        auto& dst = pass == 0 ? plus : minus;
        std::copy(data.begin(), data.end(), dst.begin());
      }
      for (std::size_t p = 0; p < np; ++p) spec[p * nyh + j] += ens.weights[m] * sign * std::conj(plus[p]) * minus[p];
    }
  }
  kfft.backward();
  const double norm = std::pow(2.0 * g.lk(), -d);
  PhaseField f(g, ens.eps, 0.0);
  auto out = f.values();
  auto real = kfft.real();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = real[i] * norm;
  return f;
}

HsBridge hs_bridge(const OrbitalEnsemble& ens) {
  ens.validate();
  const std::size_t n = ens.orbitals.size();
  double hs2 = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      cplx ip = 0.0;
      for (std::size_t i = 0; i < ens.grid.x_points(); ++i) ip += std::conj(ens.orbitals[a][i]) * ens.orbitals[b][i];
      ip *= ens.grid.x_cell();
      hs2 += ens.weights[a] * ens.weights[b] * std::norm(ip);
    }
  }
  HsBridge r;
  r.hs_norm = std::sqrt(hs2);
  r.l2_of_wigner = l2_norm(wigner_of_ensemble(ens));
  r.ratio = r.hs_norm / (std::pow(2.0 * std::numbers::pi * ens.eps, 0.5 * ens.grid.dim()) * r.l2_of_wigner);
  return r;
}

double oracle_compare(const OrbitalEnsemble& ens0, const PhaseField& f0, const Potential& phi, double t_end,
                      double dt, SplitOrder order) {
  const PhaseField w0 = wigner_of_ensemble(ens0);
  if (w0.grid() != f0.grid()) throw std::invalid_argument("oracle_compare: grid mismatch");
  if (f0.epsilon() != ens0.eps) throw std::invalid_argument("oracle_compare: epsilon mismatch");
  const double mismatch = l2_norm(w0 - f0) / l2_norm(f0);
  if (!(mismatch <= 1e-10))
    throw std::invalid_argument("oracle_compare: f0 is not the Wigner transform of the ensemble (relative gap " +
                                std::to_string(mismatch) + ")");
  NlsSolver nls(ens0, phi, dt, order);
  WignerRun run(f0, phi, dt);
  nls.advance_to(t_end);
  run.advance_to(t_end);
  const PhaseField wt = wigner_of_ensemble(nls.ensemble());
  return l2_norm(wt - run.state()) / l2_norm(run.state());
}

}  // namespace wvlab

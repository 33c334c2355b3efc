#include <benchmark/benchmark.h>

#include "wvlab/husimi.hpp"
#include "wvlab/initial_data.hpp"
#include "wvlab/kernels.hpp"
#include "wvlab/potential.hpp"
#include "wvlab/vlasov.hpp"
#include "wvlab/wigner.hpp"

using namespace wvlab;

namespace {

PhaseField datum(std::size_t n, double eps) {
  const PhaseGrid g = make_grid(1, n, n, 8.0, 8.0);
  return coherent_mixture(default_profile(2.0, 1), g, eps);
}

const Potential kPhi = Potential::gaussian(1.0, 1.0, 1);

}  // namespace

static void BM_QuantumKick(benchmark::State& st) {
  PhaseField f = datum(static_cast<std::size_t>(st.range(0)), 0.1);
  SplitStepKernels k(f.grid());
  const SpatialField v = hartree_field(density(f), kPhi).potential;
  for (auto _ : st) {
    k.quantum_kick(f, v, 0.1, 1e-3);
    benchmark::DoNotOptimize(f.values().data());
  }
}
BENCHMARK(BM_QuantumKick)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_FreeTransport(benchmark::State& st) {
  PhaseField f = datum(static_cast<std::size_t>(st.range(0)), 0.1);
  SplitStepKernels k(f.grid());
  for (auto _ : st) {
    k.free_transport(f, 1e-3);
    benchmark::DoNotOptimize(f.values().data());
  }
}
BENCHMARK(BM_FreeTransport)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_WignerStep(benchmark::State& st) {
  WignerRun run(datum(static_cast<std::size_t>(st.range(0)), 0.1), kPhi, 1e-3);
  for (auto _ : st) run.step();
}
BENCHMARK(BM_WignerStep)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_Husimi(benchmark::State& st) {
  const PhaseField f = datum(static_cast<std::size_t>(st.range(0)), 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(husimi_transform(f));
}
BENCHMARK(BM_Husimi)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_ErrorE2(benchmark::State& st) {
  const PhaseField f = datum(static_cast<std::size_t>(st.range(0)), 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(error_E2(f, kPhi));
}
BENCHMARK(BM_ErrorE2)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_VlasovStep(benchmark::State& st) {
  PhaseField g = datum(static_cast<std::size_t>(st.range(0)), 0.1);
  g.set_epsilon(0.0);
  VlasovRun run(std::move(g), kPhi, 1e-3, 2.0);
  for (auto _ : st) run.step();
}
BENCHMARK(BM_VlasovStep)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

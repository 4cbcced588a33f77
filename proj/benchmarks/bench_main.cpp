#include <benchmark/benchmark.h>

#include <random>

#include "vecbeam/laguerre.hpp"
#include "vecbeam/pipeline.hpp"
#include "vecbeam/polarimetry.hpp"
#include "vecbeam/propagation.hpp"

namespace {

using namespace vecbeam;

constexpr double kLambda = 1.56e-6;

void BM_LgMode(benchmark::State& state) {
  const GridSpec g = GridSpec::square(static_cast<int>(state.range(0)), 8e-3);
  for (auto _ : state) benchmark::DoNotOptimize(lg_mode({.p = 1, .l = 3, .w0 = 1e-3, .z = 0.5}, g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_LgMode)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_AngularSpectrum(benchmark::State& state) {
  const GridSpec g = GridSpec::square(static_cast<int>(state.range(0)), 8e-3);
  const auto f = lg_mode({.p = 0, .l = 2, .w0 = 1e-3}, g);
  for (auto _ : state) benchmark::DoNotOptimize(angular_spectrum(f, 0.5, kLambda));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}
BENCHMARK(BM_AngularSpectrum)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

// Argument: separation of the two SLM halves in cm. 0 skips the internal
// propagation step.
void BM_Convert(benchmark::State& state) {
  const GridSpec g = GridSpec::square(512, 8e-3);
  auto masks = preset_masks({0, 2, BeamFlavor::kRadialLike}, 1e-3, g);
  ConversionConfig cfg(g, std::move(masks.a), std::move(masks.b));
  cfg.inter_half_distance = static_cast<double>(state.range(0)) * 1e-2;
  for (auto _ : state) benchmark::DoNotOptimize(convert(cfg));
}
BENCHMARK(BM_Convert)->Arg(0)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_StokesFromFrames(benchmark::State& state) {
  const GridSpec g = GridSpec::square(512, 8e-3);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(0.0, 1.0);
  VectorField f(g);
  for (auto& a : f.h().amps()) a = {n(rng), n(rng)};
  for (auto& a : f.v().amps()) a = {n(rng), n(rng)};
  const auto stack = simulate_qwp_scan(f, uniform_qwp_angles(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(stokes_from_frames(stack));
}
BENCHMARK(BM_StokesFromFrames)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

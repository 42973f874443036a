#include <benchmark/benchmark.h>

#include "ihsfuse/colorspace.hpp"
#include "ihsfuse/fusion.hpp"
#include "ihsfuse/harness/synth.hpp"
#include "ihsfuse/metrics.hpp"
#include "ihsfuse/preprocess.hpp"

using namespace ihsfuse;

namespace {

const harness::SyntheticScene& scene(int size) {
  static const auto s256 = harness::make_synthetic_scene(1, 256, 256, 4);
  static const auto s512 = harness::make_synthetic_scene(1, 512, 512, 4);
  return size == 256 ? s256 : s512;
}

void BM_Fuse(benchmark::State& state) {
  const auto& s = scene(static_cast<int>(state.range(0)));
  FusionConfig cfg;
  cfg.variant = static_cast<Variant>(state.range(1));
  cfg.match_mode = state.range(2) ? MatchMode::Cdf : MatchMode::MeanStd;
  for (auto _ : state) benchmark::DoNotOptimize(fuse(s.ms, s.pan, cfg));
  state.SetItemsProcessed(state.iterations() * s.pan.pixel_count());
}
BENCHMARK(BM_Fuse)
    ->ArgsProduct({{256, 512}, {static_cast<long>(Variant::Ihs5), static_cast<long>(Variant::Yiq)}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_ForwardInverse(benchmark::State& state) {
  const auto& s = scene(512);
  const auto& spec = get_variant(Variant::Hls);
  const auto r = band(s.ground_truth, 0), g = band(s.ground_truth, 1), b = band(s.ground_truth, 2);
  for (auto _ : state) {
    const auto planes = forward(spec, r, g, b);
    benchmark::DoNotOptimize(inverse(spec, InverseMode::Corrected, planes));
  }
  state.SetItemsProcessed(state.iterations() * s.pan.pixel_count());
}
BENCHMARK(BM_ForwardInverse)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state) {
  const auto& s = scene(512);
  const auto fused = fuse(s.ms, s.pan, FusionConfig{});
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(fused, s.ground_truth));
}
BENCHMARK(BM_Evaluate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <filesystem>

#include "fbsynth/blend.hpp"
#include "fbsynth/coco.hpp"
#include "fbsynth/pipeline.hpp"
#include "fbsynth/raster.hpp"
#include "fbsynth/structures.hpp"
#include "phantom.hpp"

using namespace fbsynth;

namespace {

void BM_PoissonSquare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GrayImage dst(n + 8, n + 8, 0.4f);
  blend::Insertion ins;
  ins.origin = {4, 4};
  ins.intensity = GrayImage(n, n, 0.8f);
  ins.alpha.assign(static_cast<std::size_t>(n) * n, 1.0f);
  ins.mask = BinaryMask(n, n, true);
  for (auto _ : state) {
    GrayImage canvas = dst;
    benchmark::DoNotOptimize(blend::blend_into(canvas, ins, BlendMode::poisson_normal, {}));
  }
  state.SetComplexityN(static_cast<std::int64_t>(n) * n);
}
BENCHMARK(BM_PoissonSquare)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_StrokeChain(benchmark::State& state) {
  Rng rng(1);
  const Size canvas{1024, 1024};
  const auto chain = structures::random_chain({10, 10}, 5, canvas, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(raster::stroke_chain(chain, {static_cast<double>(state.range(0)), 1.0f, 1.0f}, canvas));
}
BENCHMARK(BM_StrokeChain)->Arg(2)->Arg(8);

void BM_FillEllipse(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(raster::fill_ellipse({512, 512}, a, a * 0.7, 0.3, {1.0f, 1.0f}, {1024, 1024}));
}
BENCHMARK(BM_FillEllipse)->Arg(16)->Arg(128);

void BM_RleEncode(benchmark::State& state) {
  Rng rng(2);
  BinaryMask m(1024, 1024);
  for (int y = 300; y < 700; ++y)
    for (int x = 200; x < 800; ++x) m.set(x, y, rng.bernoulli(0.9));
  const InstanceMask inst = InstanceMask::from_canvas(m);
  for (auto _ : state) benchmark::DoNotOptimize(coco::rle_encode(inst));
}
BENCHMARK(BM_RleEncode);

void BM_GenerateSample(benchmark::State& state) {
  const auto ph = phantom::make_phantom(3, {1024, 1024});
  std::vector<cutpaste::Crop> crops;
  for (int i = 0; i < 10; ++i) crops.push_back(cutpaste::tighten(phantom::make_crop(3, i)));
  const cutpaste::CropLibrary lib(std::move(crops));
  const pipeline::PreparedSource src{"bench", ph.image, structures::ImageAnatomy(ph.labels)};
  GenConfig cfg;
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pipeline::generate_sample(src, &lib, cfg, SeedStream(i++)));
}
BENCHMARK(BM_GenerateSample)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

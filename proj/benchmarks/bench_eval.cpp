#include <benchmark/benchmark.h>

#include "heunkit/heun_transforms.hpp"
#include "heunkit/series.hpp"

namespace {

using heunkit::Complex;

void BM_Eval2F1(benchmark::State& state) {
  const heunkit::GaussParams p{{0.35, 0.15}, {-0.42, 0.27}, {1.21, -0.33}};
  const Complex x{0.25, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(heunkit::eval_2f1(p, x).value);
}
BENCHMARK(BM_Eval2F1);

void BM_EvalHl(benchmark::State& state) {
  const heunkit::HeunParams p{{2.2, 0.7},  {0.41, -0.23}, {0.31, 0.21},
                              {-0.56, 0.13}, {1.23, -0.41}, {0.67, 0.29}};
  const Complex x{0.2, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(heunkit::eval_hl(p, x).value);
}
BENCHMARK(BM_EvalHl);

void BM_Eval3F2(benchmark::State& state) {
  const heunkit::ThreeF2Params p{
      {0.62, 0.21}, {-0.48, 0.37}, {1.83, 0.44}, {1.37, -0.29}, {0.83, 0.44}};
  const Complex x{0.25, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(heunkit::eval_3f2(p, x).value);
}
BENCHMARK(BM_Eval3F2);

void BM_HlGroupGeneration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(heunkit::generate_hl_group().size());
}
BENCHMARK(BM_HlGroupGeneration);

}  // namespace

BENCHMARK_MAIN();

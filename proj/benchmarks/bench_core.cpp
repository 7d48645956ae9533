#include "muskat/bie.hpp"
#include "muskat/dno.hpp"
#include "muskat/stepper.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

muskat::GridFunction test_profile(std::size_t n) {
  muskat::PeriodicGrid g(n);
  return muskat::GridFunction::sample(
      g, [](double x) { return 0.5 * std::cos(x) + 0.1 * std::sin(3.0 * x); });
}

void BM_Assemble(benchmark::State& state) {
  muskat::GridFunction f = test_profile(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(muskat::assemble(f, muskat::OperatorTag::kKStar));
  }
}
BENCHMARK(BM_Assemble)->Arg(128)->Arg(256)->Arg(512);

void BM_ApplyDno(benchmark::State& state) {
  muskat::GridFunction f = test_profile(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(muskat::apply_dno(f, f));
  }
}
BENCHMARK(BM_ApplyDno)->Arg(128)->Arg(256)->Arg(512);

void BM_Step(benchmark::State& state) {
  muskat::GridFunction f = test_profile(static_cast<std::size_t>(state.range(0)));
  muskat::InterfaceState s{f, 0.0, 1.0, 0.01};
  for (auto _ : state) {
    benchmark::DoNotOptimize(muskat::step(s, 1e-3, muskat::TimeScheme::kTwoStage));
  }
}
BENCHMARK(BM_Step)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();

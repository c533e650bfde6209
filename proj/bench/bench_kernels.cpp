// Serial reference paths against their OpenMP counterparts.

#include "pezzo/quasismooth.hpp"
#include "pezzo/registry.hpp"
#include "pezzo/search.hpp"

#include <benchmark/benchmark.h>

using namespace pezzo;

namespace {

const Registry& registry() {
  static const Registry reg = Registry::load(default_registry_path());
  return reg;
}

SearchSpec grass_spec(std::int64_t q_max) {
  SearchSpec s;
  s.kind = FormatKind::Grass;
  s.index = 1;
  s.q_max = q_max;
  return s;
}

void BM_enumerate_parallel(benchmark::State& st) {
  auto spec = grass_spec(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate(spec, &registry()).candidates.size());
}

void BM_enumerate_serial(benchmark::State& st) {
  auto spec = grass_spec(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_serial(spec, &registry()).candidates.size());
}

void qs_trials(benchmark::State& st, bool parallel) {
  auto f = registry().find("Pf12").instantiate({{"r", Rat(static_cast<long long>(st.range(0)))}});
  QsOptions o;
  o.trials = 3;
  o.parallel = parallel;
  for (auto _ : st) benchmark::DoNotOptimize(quasismooth_check(f, o).verdict);
}

void BM_quasismooth_parallel(benchmark::State& st) { qs_trials(st, true); }
void BM_quasismooth_serial(benchmark::State& st) { qs_trials(st, false); }

}  // namespace

BENCHMARK(BM_enumerate_parallel)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_enumerate_serial)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_quasismooth_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_quasismooth_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

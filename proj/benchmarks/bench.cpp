#include <benchmark/benchmark.h>

#include <random>

#include "grpt/alexandroff.hpp"
#include "grpt/enumerate.hpp"
#include "grpt/moore.hpp"
#include "grpt/two_groupement.hpp"

using namespace grpt;

namespace {

void BM_enum_structures(benchmark::State& state) {
  EnumerationQuery q;
  q.n = static_cast<int>(state.range(0));
  q.bound = 4;
  for (auto _ : state) {
    auto const out = enum_structures(q);
    benchmark::DoNotOptimize(out.size());
  }
}
BENCHMARK(BM_enum_structures)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_enum_two_groupements(benchmark::State& state) {
  for (auto _ : state) {
    auto const out = enum_two_groupements(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(out.size());
  }
}
BENCHMARK(BM_enum_two_groupements)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_interchange_search(benchmark::State& state) {
  InterchangeBounds bounds;
  bounds.n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto const rep = interchange_search(bounds);
    benchmark::DoNotOptimize(rep.boxtimes_interchange.checked);
  }
}
BENCHMARK(BM_interchange_search)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_moore_compose_canonicalize(benchmark::State& state) {
  std::mt19937_64 rng(12345);
  int const k = static_cast<int>(state.range(0));
  auto const c1 = random_cube(rng, k, 2, 6);
  auto const c2 = random_composable_after(rng, c1, 0);
  for (auto _ : state) {
    auto const c = compose_axis(c2, c1, 0);
    benchmark::DoNotOptimize(canonicalize(c).values.size());
  }
}
BENCHMARK(BM_moore_compose_canonicalize)->Arg(1)->Arg(2)->Arg(3);

void BM_theorem_suite(benchmark::State& state) {
  for (auto _ : state) {
    auto const rep = theorem_suite(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(rep.results.size());
  }
}
BENCHMARK(BM_theorem_suite)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

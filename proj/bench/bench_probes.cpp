// Serial vs OpenMP probe kernels on the three probe workloads the library runs.

#include <benchmark/benchmark.h>

#include "monorel/doublecone.hpp"
#include "monorel/linsub.hpp"
#include "monorel/probe.hpp"
#include "monorel/sampling.hpp"

using namespace monorel;

namespace {

constexpr std::size_t kProbes = 4000;

const FitzpatrickForm& subspace_form() {
  static const FitzpatrickForm form = [] {
    Rng rng(1);
    return FitzpatrickForm(random_maximal_monotone(rng, 4));
  }();
  return form;
}

const DoubleCone& cone() {
  static const DoubleCone d = [] {
    Rng rng(2);
    return random_monotone_cone(rng, 3, 5);
  }();
  return d;
}

const Subspace& partial() {
  static const Subspace l = [] {
    Rng rng(3);
    return random_subspace_of(rng, random_maximal_monotone(rng, 4), 2);
  }();
  return l;
}

// Never hits, so every probe runs.
std::optional<Point> in_plus_probe(std::size_t i) {
  const FitzpatrickForm& form = subspace_form();
  Rng rng = probe_rng(7, i);
  Point z = grid_point(rng, 4, 4);
  if (form.in_plus(z) && !form.subspace().contains(z)) return z;
  return std::nullopt;
}

int dc_plus_probe(std::size_t i) {
  Rng rng = probe_rng(8, i);
  return dc_in_plus(cone(), grid_point(rng, 3, 4)) ? 1 : 0;
}

int extension_probe(std::size_t i) {
  const Subspace& l = partial();
  Rng rng = probe_rng(9, i);
  const Point z = grid_point(rng, l.n(), 4);
  if (l.contains(z)) return 0;
  return inertia(gram(l.with(z))).negative == 0 ? 1 : 0;
}

void BM_InPlusSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::first_hit<Point>(kProbes, in_plus_probe));
}
void BM_InPlusOmp(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(omp::first_hit<Point>(kProbes, in_plus_probe));
}
void BM_ConePlusSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::map<int>(kProbes, dc_plus_probe));
}
void BM_ConePlusOmp(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(omp::map<int>(kProbes, dc_plus_probe));
}
void BM_MaximalProbeSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(serial::map<int>(kProbes, extension_probe));
}
void BM_MaximalProbeOmp(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(omp::map<int>(kProbes, extension_probe));
}

}  // namespace

BENCHMARK(BM_InPlusSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InPlusOmp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ConePlusSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ConePlusOmp)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaximalProbeSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaximalProbeOmp)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

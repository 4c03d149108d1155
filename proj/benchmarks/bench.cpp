#include <benchmark/benchmark.h>

#include "cpd/catalog.hpp"
#include "cpd/classifier.hpp"
#include "cpd/group_spec.hpp"
#include "cpd/lattice.hpp"
#include "cpd/modrep.hpp"

namespace
{

using namespace cpd;

void BM_BuildA7(benchmark::State &state)
{
  GroupSpec spec = catalog("A7").spec;
  for (auto _ : state)
    benchmark::DoNotOptimize(build_group(spec).order());
}
BENCHMARK(BM_BuildA7)->Unit(benchmark::kMillisecond);

void BM_LatticePsl27(benchmark::State &state)
{
  FiniteGroup g = build_group(catalog("PSL(2,7)").spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(subgroups_up_to_conjugacy(g, OrderFilter::all()).size());
}
BENCHMARK(BM_LatticePsl27)->Unit(benchmark::kMillisecond);

void BM_BruteForceOrder48(benchmark::State &state)
{
  FiniteGroup g = semidirect_group(homogeneous_sum(singer_module(2, 2, 3), 2));
  auto d = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_cpd(g, 2, d).is_cpd);
}
BENCHMARK(BM_BruteForceOrder48)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BruteForceA7(benchmark::State &state)
{
  FiniteGroup g = build_group(catalog("A7").spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_cpd(g, 7, 1).is_cpd);
}
BENCHMARK(BM_BruteForceA7)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State &state)
{
  auto t = static_cast<std::size_t>(state.range(0));
  HModule m = homogeneous_sum(singer_module(2, 2, 3), t);
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose(m).size());
}
BENCHMARK(BM_Decompose)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_EndomorphismDim(benchmark::State &state)
{
  HModule m = singer_module(7, 4, 2400);
  for (auto _ : state)
    benchmark::DoNotOptimize(endomorphism_algebra_dim(m));
}
BENCHMARK(BM_EndomorphismDim)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();

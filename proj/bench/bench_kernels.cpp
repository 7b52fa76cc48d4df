// Serial reference vs OpenMP path for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "polyhit/breakpoints.hpp"
#include "polyhit/greedy1d.hpp"
#include "polyhit/oracle.hpp"

using namespace polyhit;

namespace {

AffineFamily family_for(std::int64_t extra) {
  std::mt19937_64 rng(7);
  return fixtures::moving_polytope(rng, 2, static_cast<std::size_t>(extra));
}

Exec exec_of(const benchmark::State& st) { return st.range(1) ? Exec::parallel : Exec::serial; }

void BM_MinorPolynomials(benchmark::State& st) {
  AffineFamily f = family_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(minor_polynomials(f, Rat(1, 3), exec_of(st)));
}

void BM_RootsBetween(benchmark::State& st) {
  AffineFamily f = family_for(st.range(0));
  auto polys = minor_polynomials(f, Rat(1, 3), Exec::serial);
  for (auto _ : st) benchmark::DoNotOptimize(roots_between(polys, RealValue(Rat(1, 3)), 1, exec_of(st)));
}

void BM_GridHitCover(benchmark::State& st) {
  AffineFamily f = family_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(grid_hit_cover(f, GridSpec{201}, exec_of(st)));
}

void BM_SampleVerify(benchmark::State& st) {
  AffineFamily f = family_for(st.range(0));
  auto pts = grid_hit_cover(f, GridSpec{201}, Exec::serial).witnesses;
  for (auto _ : st) benchmark::DoNotOptimize(sample_verify(f, pts, GridSpec{1001}, exec_of(st)));
}

void BM_HitSizeExact(benchmark::State& st) {
  AffineFamily f = family_for(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hit_size(f, 100, Engine::exact(exec_of(st))));
}

}  // namespace

BENCHMARK(BM_MinorPolynomials)->ArgsProduct({{4, 8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RootsBetween)->ArgsProduct({{4, 8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridHitCover)->ArgsProduct({{8, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleVerify)->ArgsProduct({{8, 32}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HitSizeExact)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

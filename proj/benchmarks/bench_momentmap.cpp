#include <benchmark/benchmark.h>

#include "momentmap/jacobian.hpp"
#include "momentmap/moments.hpp"
#include "momentmap/roots.hpp"
#include "momentmap/sampling.hpp"

using namespace momentmap;

namespace {

RatPoly sample_for(int n) {
  return sample_interior_rooted(n, 99, 1).front();
}

void MomentMap(benchmark::State& state) {
  RatPoly p = sample_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MomentVector mv = moment_map(p);
    benchmark::DoNotOptimize(mv);
  }
}
BENCHMARK(MomentMap)->DenseRange(2, 8, 2);

void JacobianDirect(benchmark::State& state) {
  RatPoly p = sample_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rat det = jacobian_det_direct(p);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(JacobianDirect)->DenseRange(2, 8, 2);

void JacobianToeplitz(benchmark::State& state) {
  RatPoly p = sample_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rat det = jacobian_det_toeplitz(p);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(JacobianToeplitz)->DenseRange(2, 8, 2);

void JacobianUllemar(benchmark::State& state) {
  RatPoly p = sample_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rat det = jacobian_det_ullemar(p);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(JacobianUllemar)->DenseRange(2, 8, 2);

void ResultantSquared(benchmark::State& state) {
  RatPoly p = sample_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rat det = jacobian_sq_resultant(p);
    benchmark::DoNotOptimize(det);
  }
}
BENCHMARK(ResultantSquared)->DenseRange(2, 8, 2);

void RootFinder(benchmark::State& state) {
  RatPoly dp = derivative(sample_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    RootSet roots = find_roots(dp);
    benchmark::DoNotOptimize(roots);
  }
}
BENCHMARK(RootFinder)->DenseRange(2, 8, 2);

void InteriorBoxSampler(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto samples = sample_interior(static_cast<int>(state.range(0)), seed++, 500);
    benchmark::DoNotOptimize(samples);
  }
}
BENCHMARK(InteriorBoxSampler)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();

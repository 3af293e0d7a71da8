#include <benchmark/benchmark.h>

#include "pdk/verify.hpp"

#include <random>

namespace {

using namespace pdk;

std::vector<std::vector<SBTerm>> raw_inputs(std::int64_t p, std::int64_t m, int count) {
  std::mt19937_64 rng(42);
  std::vector<std::vector<SBTerm>> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(verify::random_raw_terms(rng, p, m, 6, -1, 2));
  }
  return out;
}

void BM_Canonicalize(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const std::int64_t m = state.range(1);
  const auto inputs = raw_inputs(p, m, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SBFunction::from_terms(p, m, inputs[i % inputs.size()]));
    ++i;
  }
}
BENCHMARK(BM_Canonicalize)->Args({2, 1})->Args({3, 1})->Args({3, 2});

void BM_Fourier(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  std::mt19937_64 rng(7);
  std::vector<SBFunction> fs;
  for (int i = 0; i < 32; ++i) fs.push_back(verify::random_sb(rng, p, 1, 4, -1, 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fs[i % fs.size()].fourier());
    ++i;
  }
}
BENCHMARK(BM_Fourier)->Arg(2)->Arg(3);

void BM_Convolve(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  std::mt19937_64 rng(11);
  std::vector<SBFunction> fs;
  for (int i = 0; i < 16; ++i) fs.push_back(verify::random_sb(rng, p, 1, 4, -1, 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fs[i % fs.size()].convolve(fs[(i + 1) % fs.size()]));
    ++i;
  }
}
BENCHMARK(BM_Convolve)->Arg(2)->Arg(3);

void BM_KernelBasisSweep(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  const Kernel k(Distribution::diagonal(p, 1), 1, 1);
  const auto balls = basis_balls(p, 1, 2);
  for (auto _ : state) {
    CycAccumulator acc(p);
    for (const auto& c : balls) {
      for (const auto& d : balls) {
        acc.add(k.pairing(SBFunction::indicator(c), SBFunction::indicator(d)));
      }
    }
    benchmark::DoNotOptimize(acc.take());
  }
}
BENCHMARK(BM_KernelBasisSweep)->Arg(2)->Arg(3);

void BM_ModulatedPair(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  std::mt19937_64 rng(13);
  SBFunction f = verify::random_sb(rng, p, 1, 4, 0, 2);
  if (f.is_zero()) f = SBFunction::indicator(Polydisc::unit(p, 1));
  const Distribution u = Distribution::density(f);
  const SBFunction phi = SBFunction::indicator(Polydisc::unit(p, 1));
  const PAdicPoint eta(p, {make_rational(1, pow_int(p, 4))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(u.modulated_pair(phi, eta));
  }
}
BENCHMARK(BM_ModulatedPair)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();

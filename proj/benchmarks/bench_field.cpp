#include <benchmark/benchmark.h>

#include <random>

#include "f2a/algebra.hpp"

using namespace f2a;

static void BM_FieldMul(benchmark::State& state) {
  const Field& F = Field::gf(static_cast<int>(state.range(0)));
  uint32_t x = 1, y = F.size() - 1;
  for (auto _ : state) {
    x = F.mul(x, y);
    y = F.add(y, 1) ? F.add(y, 1) : 1;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(5)->Arg(9)->Arg(13);

static void BM_RationalMul(benchmark::State& state) {
  const Field& Q = Field::rationals();
  FieldElement x = Q.parse("355/113"), y = Q.parse("-22/7");
  for (auto _ : state) {
    FieldElement z = x * y;
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_RationalMul);

static void BM_Transform(benchmark::State& state) {
  const Field& F = Field::gf(static_cast<int>(state.range(0)));
  const Msc A = Msc::from_ints(F, {1, 0, 0, 1, 0, 1, 1, 0});
  const auto& GL = gl2(F);
  size_t i = 0;
  for (auto _ : state) {
    Msc T = transform(A, GL[i++ % GL.size()]);
    benchmark::DoNotOptimize(T);
  }
}
BENCHMARK(BM_Transform)->Arg(5)->Arg(9);

static void BM_AutomorphismGroup(benchmark::State& state) {
  const Field& F = Field::gf(static_cast<int>(state.range(0)));
  const Msc A = Msc::from_ints(F, {0, 0, 0, 0, 1, 0, 0, 0});
  for (auto _ : state) {
    auto aut = automorphism_group(A);
    benchmark::DoNotOptimize(aut);
  }
}
BENCHMARK(BM_AutomorphismGroup)->Arg(5)->Arg(7);

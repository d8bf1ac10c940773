#include <benchmark/benchmark.h>

#include "f2a/census.hpp"

using namespace f2a;

static void BM_Census(benchmark::State& state) {
  const Field& F = Field::gf(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = census::enumerate_algebras(F, 1);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_Census)->Arg(3)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_FrobeniusSolve(benchmark::State& state) {
  const Field& F = Field::gf(5);
  const Msc A = Msc::from_ints(F, {3, 0, 0, 1, 0, 3, 3, 0});
  for (auto _ : state) {
    auto sol = frob::solve_frobenius_forms(A);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_FrobeniusSolve);

static void BM_CanonicalizeForm(benchmark::State& state) {
  const Field& F = Field::gf(5);
  const forms::BilinearForm S = forms::BilinearForm::parse("1,2;3,4", F);
  const forms::GroupDescriptor desc(forms::GroupTag::G2);
  for (auto _ : state) {
    auto c = forms::canonicalize_form(S, desc);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CanonicalizeForm);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "gvk/calculus.hpp"
#include "gvk/duality.hpp"
#include "gvk/fixtures.hpp"
#include "gvk/jacobi.hpp"
#include "gvk/problem.hpp"

using namespace gvk;

namespace {

ProblemFile fixture(const char* name) { return parse_problem(find_fixture(name)->source); }

void BM_SchoutenSquare(benchmark::State& state) {
  const ProblemFile p = fixture("rescaled-contact-r4");
  for (auto _ : state) benchmark::DoNotOptimize(schouten(*p.pi, *p.pi));
}
BENCHMARK(BM_SchoutenSquare);

void BM_SchoutenPower(benchmark::State& state) {
  const ProblemFile p = fixture("contact-model-r2m1-m2");
  const MultiVector pi2 = power(*p.pi, 2);
  for (auto _ : state) benchmark::DoNotOptimize(schouten(*p.pi, pi2));
}
BENCHMARK(BM_SchoutenPower);

void BM_Psi(benchmark::State& state) {
  const ProblemFile p = fixture("rescaled-lcs-r3");
  const VolumeContext ctx(*p.vol);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.psi(*p.pi));
}
BENCHMARK(BM_Psi);

void BM_DefiningPair(benchmark::State& state) {
  const ProblemFile p = fixture("rescaled-contact-r4");
  const VolumeContext ctx(*p.vol);
  const JacobiStructure j = verify_jacobi(*p.pi, *p.reeb);
  for (auto _ : state) benchmark::DoNotOptimize(defining_pair(j, ctx));
}
BENCHMARK(BM_DefiningPair);

void BM_Verify(benchmark::State& state) {
  const ProblemFile p = fixture("contact-model-r2m1-m2");
  for (auto _ : state) benchmark::DoNotOptimize(verify_jacobi(*p.pi, *p.reeb));
}
BENCHMARK(BM_Verify);

}  // namespace

BENCHMARK_MAIN();

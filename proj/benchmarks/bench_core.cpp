#include <benchmark/benchmark.h>

#include "trigrat/angle.hpp"
#include "trigrat/certifier.hpp"
#include "trigrat/highprec.hpp"
#include "trigrat/polynomial.hpp"

using namespace trigrat;

static void BM_BuildQ(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_Q(n));
}
BENCHMARK(BM_BuildQ)->Arg(31)->Arg(297)->Arg(999);

static void BM_RationalRootsQ(benchmark::State& state) {
  const IntPolynomial Q = build_Q(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rational_roots(Q));
}
BENCHMARK(BM_RationalRootsQ)->Arg(45)->Arg(297);

static void BM_Certify(benchmark::State& state) {
  const Rational r{Integer(2), Integer(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(certify(r, TrigFunction::Tan2));
}
BENCHMARK(BM_Certify)->Arg(15)->Arg(99)->Arg(499);

static void BM_Verify(benchmark::State& state) {
  const Certificate c = certify(Rational{Integer(2), Integer(state.range(0))}, TrigFunction::Cos);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c));
}
BENCHMARK(BM_Verify)->Arg(15)->Arg(99)->Arg(499);

static void BM_EvalTanSquared(benchmark::State& state) {
  const ReducedAngle a{2, 15, 1};
  const auto bits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_tan_squared(a, bits));
}
BENCHMARK(BM_EvalTanSquared)->Arg(64)->Arg(512)->Arg(4096);

BENCHMARK_MAIN();

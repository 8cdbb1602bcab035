#include <benchmark/benchmark.h>

#include "ellcarm/classify.hpp"
#include "ellcarm/experiments.hpp"
#include "ellcarm/groupstruct.hpp"
#include "ellcarm/lseries.hpp"

using namespace ellcarm;

namespace {

const mpz_class kMuller("676258600736819377469073681570025709");

void BM_TraceLargePrime(benchmark::State& state) {
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  for (auto _ : state) benchmark::DoNotOptimize(trace_of_frobenius(E, 5366089));
}
BENCHMARK(BM_TraceLargePrime)->Unit(benchmark::kMillisecond);

void BM_ScalarMulMuller(benchmark::State& state) {
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  for (auto _ : state) benchmark::DoNotOptimize(scalar_mul(kMuller + 1, {84, 448}, E, kMuller));
}
BENCHMARK(BM_ScalarMulMuller)->Unit(benchmark::kMicrosecond);

void BM_PsiHatIndex(benchmark::State& state) {
  const mpz_class n = mpz_class(1) << static_cast<unsigned long>(state.range(0));
  for (auto _ : state) {
    DivisionPolynomialContext ctx(-3500, -98000, 84, 448, kMuller);
    benchmark::DoNotOptimize(ctx.psi_hat(n + 1));
  }
}
BENCHMARK(BM_PsiHatIndex)->Arg(16)->Arg(64)->Arg(120)->Unit(benchmark::kMicrosecond);

void BM_GroupShape(benchmark::State& state) {
  const WeierstrassCurve E = parse_curve("[-1,0]");
  for (auto _ : state) benchmark::DoNotOptimize(group_shape(E, 1000003));
}
BENCHMARK(BM_GroupShape)->Unit(benchmark::kMillisecond);

void BM_ClassifyMuller(benchmark::State& state) {
  const WeierstrassCurve E = parse_curve("[-3500,-98000]");
  for (auto _ : state) benchmark::DoNotOptimize(classify_report(kMuller, E, AffinePoint{84, 448}));
}
BENCHMARK(BM_ClassifyMuller)->Unit(benchmark::kMillisecond);

void BM_TraceCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_census(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_TraceCensus)->Arg(101)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_Density(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_density(2000, 100000, 1));
}
BENCHMARK(BM_Density)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

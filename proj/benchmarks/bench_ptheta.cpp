#include "ptheta/certifier.hpp"
#include "ptheta/laurent.hpp"
#include "ptheta/spectral.hpp"
#include "ptheta/theta.hpp"
#include "ptheta/zeros.hpp"

#include <benchmark/benchmark.h>

using namespace ptheta;

static void BM_EvalTheta(benchmark::State& state) {
  PrecisionScope scope(static_cast<int>(state.range(0)));
  const MPComplex q = mp("0.45", "0.2", working_digits()), z = mp("-6", "5", working_digits());
  const Real tol = boost::multiprecision::pow(Real(10), -(working_digits() - 8));
  for (auto _ : state) benchmark::DoNotOptimize(eval_theta(q, z, tol));
}
BENCHMARK(BM_EvalTheta)->Arg(20)->Arg(40)->Arg(100)->Arg(400);

static void BM_EvalJet(benchmark::State& state) {
  const MPComplex q = mp("0.45", "0.2"), z = mp("-6", "5");
  for (auto _ : state) benchmark::DoNotOptimize(eval_jet(q, z, Real("1e-30")));
}
BENCHMARK(BM_EvalJet);

static void BM_TripleProduct(benchmark::State& state) {
  const MPComplex q = mp("0.6", "0.1"), z = mp("1.5", "-0.5");
  for (auto _ : state) benchmark::DoNotOptimize(eval_triple_product(q, z, Real("1e-30")));
}
BENCHMARK(BM_TripleProduct);

static void BM_FindXi(benchmark::State& state) {
  const MPComplex q = mp("0.4", "0.1");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_xi(q, k, Real("1e-25")));
}
BENCHMARK(BM_FindXi)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Winding(benchmark::State& state) {
  const MPComplex q = mp("0.3", "0.2");
  HolomorphicFn f = theta_function(q);
  for (auto _ : state) benchmark::DoNotOptimize(winding_count(q, circle_radius(q, 4), f));
}
BENCHMARK(BM_Winding)->Unit(benchmark::kMillisecond);

static void BM_TruncationResultant(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const MPComplex q = mp("0.45", "0.2");
  for (auto _ : state) benchmark::DoNotOptimize(truncation_resultant(q, s));
}
BENCHMARK(BM_TruncationResultant)->Arg(9)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_RefineDoubleZero(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(refine_double_zero(mp("0.435", "0.123"), mp("-5.96", "6.10"), true));
}
BENCHMARK(BM_RefineDoubleZero)->Unit(benchmark::kMillisecond);

static void BM_ComputePhi(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_phi(k, 30));
}
BENCHMARK(BM_ComputePhi)->Arg(1)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_LemmaSepar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_separ(16));
}
BENCHMARK(BM_LemmaSepar)->Unit(benchmark::kMillisecond);

static void BM_LemmaBoxes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lemma_box_enclosures(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LemmaBoxes)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

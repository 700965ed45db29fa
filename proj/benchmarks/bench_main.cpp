#include <benchmark/benchmark.h>

#include "serrewt/brauer.hpp"
#include "serrewt/breuil.hpp"
#include "serrewt/oracle.hpp"
#include "serrewt/weights.hpp"

using namespace serrewt;

// Closed-form weight set against the exhaustive scan.
static void BM_EnumerateWss(benchmark::State& st) {
  const int p = static_cast<int>(st.range(0));
  const InertialChar chi1 = InertialChar::trivial(p, 2), chi2 = InertialChar::from_digits(p, 2, {2, 2});
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_Wss(chi1, chi2, 1));
}
BENCHMARK(BM_EnumerateWss)->Arg(5)->Arg(7);

static void BM_BruteWeightScan(benchmark::State& st) {
  const int p = static_cast<int>(st.range(0));
  const InertialChar chi1 = InertialChar::trivial(p, 2), chi2 = InertialChar::from_digits(p, 2, {2, 2});
  for (auto _ : st) benchmark::DoNotOptimize(oracle::brute_weight_scan(chi1, chi2, 1, {50, 49}));
}
BENCHMARK(BM_BruteWeightScan)->Arg(5)->Arg(7);

static void BM_Partition(benchmark::State& st) {
  const GenericityData g = genericity(InertialChar::trivial(7, 2), InertialChar::from_digits(7, 2, {3, 4}), 2);
  for (auto _ : st) benchmark::DoNotOptimize(partition(g));
}
BENCHMARK(BM_Partition);

// Ext^1: slot formula against the rank computation over the truncated ring.
static void BM_ExtDim(benchmark::State& st) {
  const Params P = make_params(3, 1, static_cast<int>(st.range(0)));
  const auto M = RankOneBreuil::make_dlog(P, {0}, 0, {0});
  const auto N = RankOneBreuil::make_dlog(P, {P.e()}, 0, {0});
  for (auto _ : st) benchmark::DoNotOptimize(ext_dim(M, N));
}
BENCHMARK(BM_ExtDim)->Arg(1)->Arg(3)->Arg(8);

static void BM_BruteExtDim(benchmark::State& st) {
  const Params P = make_params(3, 1, static_cast<int>(st.range(0)));
  const auto M = RankOneBreuil::make_dlog(P, {0}, 0, {0});
  const auto N = RankOneBreuil::make_dlog(P, {P.e()}, 0, {0});
  for (auto _ : st) benchmark::DoNotOptimize(oracle::brute_ext_dim(M, N));
}
BENCHMARK(BM_BruteExtDim)->Arg(1)->Arg(3)->Arg(8);

static void BM_BruteHomSpace(benchmark::State& st) {
  const Params P = make_params(3, 2, 1);
  const auto M = RankOneBreuil::make_dlog(P, {0, 0}, 0, {0, 0});
  const auto N = RankOneBreuil::make_dlog(P, {8, 0}, 0, {7, 5});
  for (auto _ : st) benchmark::DoNotOptimize(oracle::brute_hom_space(M, N));
}
BENCHMARK(BM_BruteHomSpace);

// Brauer table construction (uncached) and one certified decomposition.
static void BM_BrauerTable(benchmark::State& st) {
  const int p = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(brauer::BrauerTable(p, 2));
}
BENCHMARK(BM_BrauerTable)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BruteJH(benchmark::State& st) {
  const InertialChar a(5, 2, 7), b(5, 2, 13);
  brauer::BrauerTable::get(5, 2);
  for (auto _ : st) benchmark::DoNotOptimize(brauer::brute_jh(a, b));
}
BENCHMARK(BM_BruteJH);
BENCHMARK_MAIN();

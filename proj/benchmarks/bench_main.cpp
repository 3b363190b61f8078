#include <benchmark/benchmark.h>

#include "ellhyp/catalog.hpp"
#include "ellhyp/determinants.hpp"
#include "ellhyp/multivar.hpp"
#include "ellhyp/rng.hpp"
#include "ellhyp/series.hpp"

using namespace ellhyp;
using C = Complex<double>;

namespace {

const Nome<double> kNome{C(0.55, 0.2), C(0.12, -0.04)};

void BM_eval_E(benchmark::State& state) {
  const C p(0.3 * static_cast<double>(state.range(0)) / 10.0, 0.05);
  C x(0.7, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(eval_E(x, p));
}
BENCHMARK(BM_eval_E)->DenseRange(1, 9, 4);

void BM_eval_E_extended(benchmark::State& state) {
  const Complex<long double> x(0.7L, 0.2L), p(0.12L, -0.04L);
  for (auto _ : state) benchmark::DoNotOptimize(eval_E(x, p));
}
BENCHMARK(BM_eval_E_extended);

void BM_pochhammer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pochhammer_e(C(0.8, 0.3), kNome, n));
}
BENCHMARK(BM_pochhammer)->Arg(2)->Arg(8)->Arg(32);

void BM_sum_omega(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const C a(0.9, 0.4), b(1.3, -0.2), c(-0.6, 0.8), d(0.7, 1.1);
  const C e = a * a * ipow(kNome.q, n + 1) / (b * c * d);
  const OmegaSpec<double> spec{a, {b, c, d, e}, kNome, n};
  for (auto _ : state) benchmark::DoNotOptimize(sum_omega(spec));
}
BENCHMARK(BM_sum_omega)->Arg(2)->Arg(6)->Arg(12);

void BM_sum_Omega(benchmark::State& state) {
  const int nparts = static_cast<int>(state.range(0)), N = 2;
  const C a(0.9, 0.4), b(1.3, -0.2), c(-0.6, 0.8), d(0.7, 1.1), x(1.2, 0.3);
  const C e = a * a * ipow(kNome.q, N + 1) / (b * c * d * ipow(x, nparts - 1));
  for (auto _ : state) benchmark::DoNotOptimize(sum_Omega(a, {b, c, d, e}, kNome, x, nparts, N));
}
BENCHMARK(BM_sum_Omega)->DenseRange(1, 4);

void BM_det_numeric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  Matrix<double> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.polar(0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(det_numeric(m));
}
BENCHMARK(BM_det_numeric)->Arg(3)->Arg(6)->Arg(12);

void BM_andrews_stanton_sides(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(andrews_stanton_sides(C(0.9, 0.3), C(1.2, -0.4), kNome, n));
}
BENCHMARK(BM_andrews_stanton_sides)->DenseRange(1, 5, 2);

void BM_identity_e109(benchmark::State& state) {
  const Identity& ident = *find_identity("e109");
  const auto point = sample_point(ident, 1).point;
  for (auto _ : state) benchmark::DoNotOptimize(ident.eval_double(point));
}
BENCHMARK(BM_identity_e109);

}  // namespace

BENCHMARK_MAIN();

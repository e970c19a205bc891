#include <benchmark/benchmark.h>

#include <random>

#include "starq/membership.hpp"
#include "starq/radii.hpp"
#include "starq/series.hpp"
#include "starq/special.hpp"

using namespace starq;

namespace {

TruncatedSeries random_series(std::size_t order) {
  std::mt19937 gen(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(order + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k <= order; ++k) c[k] = Complex{u(gen), u(gen)} * 0.5;
  return TruncatedSeries(std::move(c));
}

void BM_SeriesMul(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const TruncatedSeries a = random_series(n);
  const TruncatedSeries b = random_series(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(BM_SeriesMul)->Arg(64)->Arg(128);

void BM_SeriesDiv(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const TruncatedSeries a = random_series(n);
  const TruncatedSeries b = random_series(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(div(a, b));
  }
}
BENCHMARK(BM_SeriesDiv)->Arg(64)->Arg(128);

void BM_Revert(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = double(k);
  const TruncatedSeries koebe(std::move(c));
  for (auto _ : state) {
    benchmark::DoNotOptimize(revert(koebe));
  }
}
BENCHMARK(BM_Revert)->Arg(32)->Arg(64);

void BM_QAlphaSeries(benchmark::State& state) {
  const Alpha a(0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_alpha_series(a, state.range(0)));
  }
}
BENCHMARK(BM_QAlphaSeries)->Arg(64)->Arg(128);

void BM_QAlphaEval(benchmark::State& state) {
  const Alpha a(0.3);
  const Complex z{0.55, 0.31};
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_alpha_eval(a, z));
  }
}
BENCHMARK(BM_QAlphaEval);

void BM_RadiusSolve(benchmark::State& state) {
  const RadiusProblem p(RadiusClass::Exp, Alpha(0.3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(p));
  }
}
BENCHMARK(BM_RadiusSolve);

void BM_SqCheck(benchmark::State& state) {
  const FunctionHandle h = FunctionHandle::f_alpha(Alpha(0.25));
  const SampleGrid g({0.3, 0.6, 0.9}, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_sq_inequality(h, Alpha(0.25), g));
  }
}
BENCHMARK(BM_SqCheck)->Arg(256)->Arg(1024);

void BM_Subordination(benchmark::State& state) {
  const Alpha a(0.25);
  const FunctionHandle h = FunctionHandle::f_alpha(a);
  const SampleGrid g({0.3, 0.6, 0.9}, 256);
  const BoundaryCurve curve = boundary_polygon(a, state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_subordination_qalpha(h, a, g, curve));
  }
}
BENCHMARK(BM_Subordination)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();

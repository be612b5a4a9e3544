#include <benchmark/benchmark.h>

#include "duzeta/group.hpp"
#include "duzeta/series.hpp"
#include "duzeta/theta.hpp"
#include "duzeta/zeta.hpp"

using namespace duzeta;

static void BM_Closure(benchmark::State& state) {
    auto [g1, g2] = h1_generators();
    for (auto _ : state) {
        MatrixGroup g = closure({g1, g2}, 1000);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_Closure);

static void BM_ReynoldsPower(benchmark::State& state) {
    const MatrixGroup& h1 = h1_group();
    const auto ell = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        HomogBivariate f = reynolds_power(h1, ell);
        benchmark::DoNotOptimize(f.coeffs().data());
    }
}
BENCHMARK(BM_ReynoldsPower)->Arg(8)->Arg(24)->Arg(48);

static void BM_ZetaLinearSystem(benchmark::State& state) {
    FormalWeightEnumerator f = normalized_eisenstein(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        ZetaPolynomial z = zeta_via_linear_system(f, Rational(2));
        benchmark::DoNotOptimize(z.poly.coeffs().data());
    }
}
BENCHMARK(BM_ZetaLinearSystem)->Arg(12)->Arg(24)->Arg(48);

static void BM_ZetaSeries(benchmark::State& state) {
    FormalWeightEnumerator f = normalized_eisenstein(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        ZetaPolynomial z = zeta_via_series(f, Rational(2));
        benchmark::DoNotOptimize(z.poly.coeffs().data());
    }
}
BENCHMARK(BM_ZetaSeries)->Arg(12)->Arg(24)->Arg(48);

static void BM_SeriesMultiply(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    TruncatedSeries a = geometric_negative_power(3, order);
    TruncatedSeries b = geometric_negative_power(7, order);
    for (auto _ : state) {
        TruncatedSeries c = a * b;
        benchmark::DoNotOptimize(c.coeffs().data());
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(64)->Arg(256);

static void BM_ThetaMap(benchmark::State& state) {
    FormalWeightEnumerator f = normalized_eisenstein(24);
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        QSeries s = th_map(f, order);
        benchmark::DoNotOptimize(s.coeffs().data());
    }
}
BENCHMARK(BM_ThetaMap)->Arg(100)->Arg(200);

BENCHMARK_MAIN();

#include "loopcalc/decompose.hpp"
#include "loopcalc/hilton.hpp"
#include "loopcalc/normalize.hpp"
#include "loopcalc/series.hpp"
#include "loopcalc/ss_oracle.hpp"
#include "loopcalc/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace loopcalc;

static void BM_TensorAlgebraSeries(benchmark::State& state)
{
    const int cap = static_cast<int>(state.range(0));
    TruncatedSeries g(cap);
    for (int d = 2; d <= 6 && d <= cap; ++d)
        g[d] = d;
    for (auto _ : state)
        benchmark::DoNotOptimize(tensor_algebra_series(g));
}
BENCHMARK(BM_TensorAlgebraSeries)->Arg(25)->Arg(50)->Arg(100);

static void BM_LyndonMultiplicities(benchmark::State& state)
{
    const WeightedAlphabet a(std::vector<int>{1, 1, 2, 3, 3, 4});
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(lyndon_multiplicities(a, cap));
}
BENCHMARK(BM_LyndonMultiplicities)->Arg(20)->Arg(40);

static void BM_HiltonMilnor(benchmark::State& state)
{
    const SphereWedge w{{2, 2}, {3, 2}, {5, 1}};
    const int cap = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hilton_milnor(w, cap));
}
BENCHMARK(BM_HiltonMilnor)->Arg(15)->Arg(25);

static void BM_FourManifoldNormalForm(benchmark::State& state)
{
    const FourManifoldSpec spec{static_cast<int>(state.range(0)), std::nullopt};
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_form(decompose(spec), 30));
}
BENCHMARK(BM_FourManifoldNormalForm)->Arg(2)->Arg(5)->Arg(10);

static void BM_P4EInfinity(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const SSInput in = random_ss_input(state.range(0) != 0, 25, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(p4_e_infinity(in));
}
BENCHMARK(BM_P4EInfinity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_QhlgyReplay(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(qhlgy_series_check(2, 5, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QhlgyReplay)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

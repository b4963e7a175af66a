#include "qwalk/multiparticle.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

#include <benchmark/benchmark.h>

using namespace qwalk;

static WalkerWave wave_at(int t)
{
    WalkerWave w = initial_wave(coin_basis(up));
    for (int s = 0; s < t; ++s)
        w = step_serial(w);
    return w;
}

static void step_serial_bench(benchmark::State& st)
{
    WalkerWave w = wave_at(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(step_serial(w));
    st.SetItemsProcessed(st.iterations() * w.width());
}
BENCHMARK(step_serial_bench)->Arg(1000)->Arg(4000)->Arg(16000);

static void step_parallel_bench(benchmark::State& st)
{
    WalkerWave w = wave_at(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(step(w));
    st.SetItemsProcessed(st.iterations() * w.width());
}
BENCHMARK(step_parallel_bench)->Arg(1000)->Arg(4000)->Arg(16000);

static void moment_tables_bench(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(moment_tables(static_cast<int>(st.range(0))));
}
BENCHMARK(moment_tables_bench)->Arg(100)->Arg(300);

static void quadratic_form_apply(benchmark::State& st)
{
    const int n = static_cast<int>(st.range(0));
    QuadraticForm M(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(M.dim());
    for (auto _ : st)
        benchmark::DoNotOptimize(M.apply(v));
}
BENCHMARK(quadratic_form_apply)->Arg(8)->Arg(12)->Arg(14);

static void mean_distance_bench(benchmark::State& st)
{
    const int n = static_cast<int>(st.range(0));
    CoinVector a = eigenstate(n, 2);
    MomentTable m = moment_table(100);
    for (auto _ : st) {
        double s = 0;
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                s += pair_moment(m, a, j, k);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(mean_distance_bench)->Arg(7)->Arg(12);

BENCHMARK_MAIN();

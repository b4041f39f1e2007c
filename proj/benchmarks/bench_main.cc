/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/exact.hh>
#include <strongdim/generators.hh>
#include <strongdim/products.hh>
#include <strongdim/strong_dim.hh>
#include <strongdim/strong_resolving.hh>

#include <benchmark/benchmark.h>

using namespace strongdim;

namespace
{
    auto odd_odd(int r, int t) -> Graph
    {
        return product(ProductKind::strong, generate(family::Cycle{ 2 * r + 1 }), generate(family::Cycle{ 2 * t + 1 }));
    }
}

static void independence_odd_odd(benchmark::State & state)
{
    auto g = odd_odd(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(independence_number(g));
    state.SetLabel("n=" + std::to_string(g.order()));
}
BENCHMARK(independence_odd_odd)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void independence_direct_odd_odd(benchmark::State & state)
{
    auto g = odd_odd(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(max_independent_set_direct(g));
}
BENCHMARK(independence_direct_odd_odd)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void vertex_cover_random(benchmark::State & state)
{
    Rng rng(7);
    auto g = random_graph(static_cast<int>(state.range(0)), 0.2, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_vertex_cover(g));
}
BENCHMARK(vertex_cover_random)->Arg(40)->Arg(60)->Arg(80)->Unit(benchmark::kMillisecond);

static void strong_resolving_graph_grid(benchmark::State & state)
{
    int side = static_cast<int>(state.range(0));
    auto g = generate(family::Grid{ side, side });
    for (auto _ : state)
        benchmark::DoNotOptimize(strong_resolving_graph(g));
}
BENCHMARK(strong_resolving_graph_grid)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMicrosecond);

static void predicted_mmd_cycles(benchmark::State & state)
{
    auto g = generate(family::Cycle{ static_cast<int>(state.range(0)) });
    for (auto _ : state)
        benchmark::DoNotOptimize(predicted_mmd_edges(g, g));
}
BENCHMARK(predicted_mmd_cycles)->Arg(9)->Arg(15)->Arg(21)->Unit(benchmark::kMicrosecond);

static void strong_product_build(benchmark::State & state)
{
    Rng rng(3);
    auto g = random_graph(static_cast<int>(state.range(0)), 0.3, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(product(ProductKind::strong, g, g));
}
BENCHMARK(strong_product_build)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

static void dim_s_c3_odd(benchmark::State & state)
{
    auto g = product(ProductKind::strong, generate(family::Cycle{ 3 }),
            generate(family::Cycle{ 2 * static_cast<int>(state.range(0)) + 1 }));
    for (auto _ : state)
        benchmark::DoNotOptimize(strong_metric_dimension(g));
}
BENCHMARK(dim_s_c3_odd)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();

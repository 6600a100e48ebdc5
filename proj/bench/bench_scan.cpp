// Serial reference kernel against the OpenMP kernel on the sigma_min grid.

#include <benchmark/benchmark.h>

#include <random>

#include "qgraph/scan.hpp"
#include "qgraph/spectral.hpp"

namespace {

qgraph::MetricGraph bench_graph(int n) {
    // Complete graph on n vertices with two-step potentials.
    qgraph::GraphDescription d;
    for (int i = 0; i < n; ++i) d.vertices.push_back("v" + std::to_string(i));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d.edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j), d.vertices[static_cast<std::size_t>(i)],
                               d.vertices[static_cast<std::size_t>(j)],
                               qgraph::PiecewisePotential({0.0, 0.5, 1.0}, {val(rng), val(rng)})});
    return qgraph::build_graph(d);
}

std::vector<double> grid(std::size_t points) {
    std::vector<double> out(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double u = 0.5 + 0.01 * static_cast<double>(i);
        out[i] = u * u;
    }
    return out;
}

void BM_ScanSerial(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    const auto lambdas = grid(2000);
    for (auto _ : state) benchmark::DoNotOptimize(qgraph::scan_serial(g, lambdas));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lambdas.size()));
}

void BM_ScanParallel(benchmark::State& state) {
    const auto g = bench_graph(static_cast<int>(state.range(0)));
    const auto lambdas = grid(2000);
    for (auto _ : state) benchmark::DoNotOptimize(qgraph::scan_parallel(g, lambdas));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lambdas.size()));
}

void BM_FindEigenvalues(benchmark::State& state) {
    const auto g = bench_graph(4);
    qgraph::SearchOptions opts;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(qgraph::find_eigenvalues(g, -10.0, 400.0, opts));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindEigenvalues)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "graphband/bracketing.hpp"
#include "graphband/fixtures.hpp"
#include "graphband/floquet.hpp"
#include "graphband/spectra.hpp"

using namespace graphband;

namespace {

const FundamentalGraph& example_graph() {
    static FundamentalGraph g = fixture_graph("paper-example");
    return g;
}

void BM_FloquetAssembly(benchmark::State& state) {
    const FundamentalGraph& g = example_graph();
    Potential q = Potential::zero(5);
    std::vector<double> theta{0.7, 1.9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(floquet_matrix(g, q, theta));
    }
}
BENCHMARK(BM_FloquetAssembly);

void BM_FiberEigensolve(benchmark::State& state) {
    const FundamentalGraph& g = example_graph();
    Potential q = Potential::zero(5);
    std::vector<double> theta{0.7, 1.9};
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigvals_hermitian(floquet_matrix(g, q, theta)));
    }
}
BENCHMARK(BM_FiberEigensolve);

void BM_BandSweep(benchmark::State& state) {
    const FundamentalGraph& g = example_graph();
    Potential q = Potential::zero(5);
    const int N = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(band_sweep(g, q, N, {1e-8, false, threads}));
    }
}
BENCHMARK(BM_BandSweep)
    ->ArgsProduct({{16, 32, 64}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_DomainEigendata(benchmark::State& state) {
    FundamentalDomain dom = fixture_domain("paper-example");
    Potential q = Potential::zero(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(domain_eigendata(dom, q));
    }
}
BENCHMARK(BM_DomainEigendata);

void BM_TorusOracle(benchmark::State& state) {
    const FundamentalGraph& g = example_graph();
    Potential q = Potential::zero(5);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(torus_oracle(g, q, N));
    }
}
BENCHMARK(BM_TorusOracle)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

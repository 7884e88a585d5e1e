#include <benchmark/benchmark.h>

#include "tsc/decoders.hpp"
#include "tsc/noise.hpp"
#include "tsc/sweep.hpp"

using namespace tsc;

namespace {

void BM_TsccDecode(benchmark::State& state) {
    auto size = std::size_t(state.range(0));
    double p = double(state.range(1)) / 1000.0;
    TsccDecoder dec(extract_tscc_code(build_family(Family::square_octagon_torus, size)));
    const auto& code = dec.code();
    std::uint64_t t = 0;
    for (auto _ : state) {
        state.PauseTiming();
        Rng rng(Rng::derive(1, size, 0, t++));
        auto e = sample_error(NoiseModel{p}, code.n_qubits, rng);
        auto syn = code.measure_syndrome(e);
        state.ResumeTiming();
        benchmark::DoNotOptimize(dec.decode(syn));
    }
    state.SetLabel(std::to_string(code.n_qubits) + " qubits");
}
BENCHMARK(BM_TsccDecode)->Args({2, 10})->Args({2, 25})->Args({4, 10})->Args({4, 25});

void BM_SubsystemSurfaceDecode(benchmark::State& state) {
    auto L = std::size_t(state.range(0));
    SubsystemSurfaceDecoder dec(extract_subsystem_surface_code(
        subsystem_surface_construction(build_family(Family::square_torus, L))));
    const auto& code = dec.code();
    std::uint64_t t = 0;
    for (auto _ : state) {
        state.PauseTiming();
        Rng rng(Rng::derive(2, L, 0, t++));
        auto e = sample_error(NoiseModel{0.02}, code.n_qubits, rng);
        auto syn = code.measure_syndrome(e);
        state.ResumeTiming();
        benchmark::DoNotOptimize(dec.decode(syn));
    }
}
BENCHMARK(BM_SubsystemSurfaceDecode)->Arg(4)->Arg(8);

void BM_BlossomComplete(benchmark::State& state) {
    auto n = std::size_t(state.range(0));
    Rng rng(3);
    DefectGraph g;
    for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(i);
    g.dist.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.dist[i][j] = g.dist[j][i] = std::int64_t(1 + rng.next() % 40);
    for (auto _ : state) benchmark::DoNotOptimize(min_weight_perfect_matching(g));
}
BENCHMARK(BM_BlossomComplete)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_GreedyComplete(benchmark::State& state) {
    auto n = std::size_t(state.range(0));
    Rng rng(3);
    DefectGraph g;
    for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(i);
    g.dist.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.dist[i][j] = g.dist[j][i] = std::int64_t(1 + rng.next() % 40);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_perfect_matching(g));
}
BENCHMARK(BM_GreedyComplete)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ExtractTscc(benchmark::State& state) {
    auto size = std::size_t(state.range(0));
    auto colex = build_family(Family::square_octagon_torus, size);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_tscc_code(colex));
}
BENCHMARK(BM_ExtractTscc)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

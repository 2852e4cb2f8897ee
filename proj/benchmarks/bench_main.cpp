#include <benchmark/benchmark.h>

#include "gainspec/families.hpp"
#include "gainspec/gain_theory.hpp"
#include "gainspec/spectral.hpp"
#include "gainspec/zero_forcing.hpp"

using namespace gainspec;

namespace {

void BM_JacobiEigenvalues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GainGraph g = gen_random_connected(n, 4, 7);
    const HermitianMatrix a = adjacency_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(a));
}
BENCHMARK(BM_JacobiEigenvalues)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_RankByElimination(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HermitianMatrix a = adjacency_matrix(gen_random_connected(n, 4, 7));
    for (auto _ : state) benchmark::DoNotOptimize(rank_by_elimination(a));
}
BENCHMARK(BM_RankByElimination)->Arg(16)->Arg(64);

void BM_Closure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GainGraph g = gen_random_connected(n, 4, 21);
    VertexSet initial;
    for (int v = 0; v < n; v += 3) initial.push_back(v);
    for (auto _ : state) benchmark::DoNotOptimize(closure(g, initial));
}
BENCHMARK(BM_Closure)->Arg(24)->Arg(96);

void BM_ExactZeroForcing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GainGraph g = gen_complete(n);
    for (auto _ : state) benchmark::DoNotOptimize(zero_forcing_number(g));
}
BENCHMARK(BM_ExactZeroForcing)->Arg(8)->Arg(12);

void BM_BalanceWitness(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GainGraph shape = gen_random_connected(n, 4, 5);
    std::vector<GainEdge> ones = shape.edges();
    for (auto& e : ones) e.gain = GainAngle::one();
    const GainGraph balanced = apply_switching(GainGraph(shape.order(), std::move(ones)),
                                               random_switching(shape, 3));
    for (auto _ : state) benchmark::DoNotOptimize(find_balance_witness(balanced));
}
BENCHMARK(BM_BalanceWitness)->Arg(64)->Arg(128);

void BM_TypePhiSampleNullity(benchmark::State& state) {
    const GainGraph g = gen_complete_bipartite(4, 4);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(nullity_by_spectrum(sample_type_phi(g, ++seed).matrix));
}
BENCHMARK(BM_TypePhiSampleNullity);

} // namespace

BENCHMARK_MAIN();

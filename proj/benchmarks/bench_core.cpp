#include <soficlab/soficlab.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

using namespace soficlab;

namespace {

LabeledGraph corpus(const std::string& name) {
    return load_presentation(std::string(SOFICLAB_CORPUS_DIR) + "/" + name + ".json");
}

// Hamiltonian cycle plus a few chords, two letters; not right-resolving in general.
LabeledGraph random_graph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, static_cast<Symbol>(rng() % 2)});
    for (int i = 0; i < n; ++i)
        edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n), static_cast<Symbol>(rng() % 2)});
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    return LabeledGraph(Alphabet({"0", "1"}), names, edges);
}

void BM_FischerCover(benchmark::State& state) {
    const LabeledGraph g = random_graph(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(fischer_cover_of(g));
}
BENCHMARK(BM_FischerCover)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
    const ShiftHandle y = ShiftHandle::from_graph(corpus("golden_even"));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(y, n));
}
BENCHMARK(BM_Census)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Entropy(benchmark::State& state) {
    const LabeledGraph g = random_graph(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(entropy_of_graph(g));
}
BENCHMARK(BM_Entropy)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_InjectiveSub(benchmark::State& state) {
    const CoverSpec pi = CoverSpec::from_graph(ShiftHandle::from_graph(corpus("golden_even")).fischer().graph);
    for (auto _ : state) benchmark::DoNotOptimize(extract_injective_sub(pi, mpq_class(1, 8)));
}
BENCHMARK(BM_InjectiveSub)->Unit(benchmark::kMillisecond);

void BM_DecideFactorizable(benchmark::State& state) {
    const ShiftHandle z = ShiftHandle::from_graph(corpus("golden"));
    const ShiftHandle y = ShiftHandle::from_graph(corpus("even"));
    for (auto _ : state) benchmark::DoNotOptimize(decide_factorizable(z, y));
}
BENCHMARK(BM_DecideFactorizable)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

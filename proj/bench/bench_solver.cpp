#include <benchmark/benchmark.h>

#include "drn/graph.hpp"
#include "drn/solver.hpp"

namespace {

struct Case {
    const char* graph;
    int k;
};

// Each case forces a full refutation or a nontrivial search.
constexpr Case kCases[] = {{"C15", 5}, {"C12", 4}, {"K3,4", 4}, {"C16", 5}, {"K4-P4", 3}};

drn::Graph graph_of(int i) { return drn::build(drn::parse_family(kCases[i].graph)); }

void serial(benchmark::State& state) {
    const auto i = static_cast<int>(state.range(0));
    const auto g = graph_of(i);
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = drn::is_k_representable_serial(g, kCases[i].k);
        nodes = r.stats.nodes;
        benchmark::DoNotOptimize(r.verdict);
    }
    state.SetLabel(std::string(kCases[i].graph) + "@" + std::to_string(kCases[i].k));
    state.counters["nodes"] = static_cast<double>(nodes);
}

void parallel(benchmark::State& state) {
    const auto i = static_cast<int>(state.range(0));
    const auto g = graph_of(i);
    drn::SearchLimits limits;
    limits.workers = static_cast<int>(state.range(1));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = drn::is_k_representable(g, kCases[i].k, limits);
        nodes = r.stats.nodes;
        benchmark::DoNotOptimize(r.verdict);
    }
    state.SetLabel(std::string(kCases[i].graph) + "@" + std::to_string(kCases[i].k));
    state.counters["nodes"] = static_cast<double>(nodes);
}

}  // namespace

BENCHMARK(serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel)->ArgsProduct({{0, 1, 2, 3, 4}, {1, 2, 4, 0}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

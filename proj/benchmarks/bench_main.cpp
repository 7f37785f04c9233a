#include <benchmark/benchmark.h>

#include "hubroute/experiments.hpp"
#include "hubroute/generators.hpp"
#include "hubroute/metrics.hpp"
#include "hubroute/router.hpp"
#include "hubroute/scheme.hpp"

using namespace hubroute;

namespace {

Graph test_graph(uint32_t n) {
    return make_network(Family::kPowerLaw, n, 2.3, 2, 7.0, 42);
}

void BM_Bfs(benchmark::State& state) {
    Graph g = test_graph(static_cast<uint32_t>(state.range(0)));
    NodeId s = 0;
    for (auto _ : state) {
        auto r = bfs(g, s);
        benchmark::DoNotOptimize(r.distance.data());
        s = (s + 1) % g.node_count();
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Bfs)->Arg(1000)->Arg(10000);

void BM_BuildScheme(benchmark::State& state) {
    Graph g = test_graph(static_cast<uint32_t>(state.range(0)));
    for (auto _ : state) {
        Scheme s = build_scheme(g, SchemeConfig{100});
        benchmark::DoNotOptimize(&s);
    }
}
BENCHMARK(BM_BuildScheme)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_RoutePairs(benchmark::State& state) {
    Graph g = test_graph(10000);
    Scheme scheme = build_scheme(g, SchemeConfig{100});
    uint64_t seed = 0;
    for (auto _ : state) {
        uint64_t hops = 0;
        route_all_pairs(scheme, PairPolicy::sampled(static_cast<uint64_t>(state.range(0)), seed++),
                        [&](const RouteTrace& t) { hops += t.hops(); });
        benchmark::DoNotOptimize(hops);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RoutePairs)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// Compares the OpenMP closure kernel against the serial reference on
// progressively larger in-class instances.

#include <benchmark/benchmark.h>

#include "cohwl/coherent.hpp"
#include "cohwl/generators.hpp"

namespace {

cohwl::Graph instance(int n) {
    // chain graph on ~n vertices: in class, nontrivial refinement
    std::vector<int> sizes;
    for (int s = n / 2; s >= 1; s -= 1) sizes.push_back(s);
    return cohwl::gen_chain_graph(sizes);
}

void closure_parallel(benchmark::State& state) {
    cohwl::Graph g = instance(int(state.range(0)));
    for (auto _ : state) {
        auto c = cohwl::wl_closure(g.n(), {g.arcs()}, {0});
        benchmark::DoNotOptimize(c.coloring.color.data());
    }
}

void closure_reference(benchmark::State& state) {
    cohwl::Graph g = instance(int(state.range(0)));
    for (auto _ : state) {
        auto c = cohwl::wl_closure_reference(g.n(), {g.arcs()}, {0});
        benchmark::DoNotOptimize(c.coloring.color.data());
    }
}

}  // namespace

BENCHMARK(closure_parallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(closure_reference)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohwl/graph.hpp"
#include "cohwl/recognition.hpp"

namespace cohwl {

/// splitmix64: portable seeded generator, stable across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [0,1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    /// uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// m disjoint copies of K_{a,b}, numbered contiguously per copy.
Graph gen_mkab(int m, int a, int b);

/// Bipartite graph with nested neighborhoods of the given (nonincreasing)
/// sizes; chordal bipartite and claw-free by construction (no induced 2K_2).
Graph gen_chain_graph(const std::vector<int>& sizes);

/// Caterpillar tree: a spine path with pendant leaves per spine vertex.
Graph gen_caterpillar(int spine, const std::vector<int>& leaves);

/// Random balanced bipartite graph with edge probability p, returned only
/// when it lands in class; deterministic given the seed.
std::optional<Graph> gen_rejection(int n, double p, std::uint64_t seed);

/// Named graphs: "T2", "Ck", "Pk", "K_{a,b}" (also "Ka,b").
Graph named(const std::string& name);

struct CorpusEntry {
    std::string family;
    nlohmann::ordered_json params;
    std::uint64_t seed = 0;
    Graph graph;
    ClassVerdict verdict;

    nlohmann::ordered_json to_json() const;
};

/// Deterministic standard corpus: all named graphs, the mK_{a,b} grid with
/// m,a,b <= 3, chain graphs and caterpillars up to n=16, accepted rejection
/// samples up to n=40, and the out-of-class adversaries.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 20200530, int rejection_target = 560);

/// Uniformly seeded random permutation of the vertices of g.
Graph relabel(const Graph& g, Rng& rng);

/// Seeded Erdos-Renyi graph (not necessarily in class; oracle fodder).
Graph gen_random_graph(int n, double p, std::uint64_t seed);

}  // namespace cohwl

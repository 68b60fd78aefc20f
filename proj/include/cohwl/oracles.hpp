#pragma once

// Naive enumeration oracles, independent of the backtracking recognizers.
// Shared by the unit tests, the acceptance suite and `cohwl selftest`.

#include <array>

#include "cohwl/graph.hpp"

namespace cohwl::oracles {

/// Some vertex subset induces a chordless cycle of length >= 6 (full 2^n scan).
inline bool has_long_induced_cycle(const Graph& g) {
    const int n = g.n();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 6) continue;
        // an induced cycle is exactly: every member has degree 2 inside, connected
        int size = __builtin_popcount(mask), edges = 0;
        bool all_deg2 = true;
        for (int u = 0; u < n && all_deg2; ++u) {
            if (!(mask >> u & 1)) continue;
            int d = 0;
            for (int v = 0; v < n; ++v)
                if ((mask >> v & 1) && g.adjacent(u, v)) ++d;
            if (d != 2) all_deg2 = false;
            edges += d;
        }
        if (!all_deg2 || edges != 2 * size) continue;
        // connectivity of the induced subgraph
        int start = __builtin_ctz(mask);
        unsigned seen = 1u << start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int u = 0; u < n; ++u) {
                if (!(seen >> u & 1)) continue;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v & 1) && !(seen >> v & 1) && g.adjacent(u, v)) {
                        seen |= 1u << v;
                        grew = true;
                    }
            }
        }
        if (seen == mask) return true;
    }
    return false;
}

/// Some 7-subset induces the bipartite claw (checked via degree structure:
/// 6 edges, one degree-3 vertex adjacent to the three degree-2 vertices,
/// each of those adjacent to one degree-1 vertex).
inline bool has_claw_7subset(const Graph& g) {
    const int n = g.n();
    if (n < 7) return false;
    std::array<int, 7> pick{};
    auto induces_t2 = [&]() {
        int deg[7] = {0};
        int edges = 0;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (g.adjacent(pick[i], pick[j])) {
                    ++deg[i];
                    ++deg[j];
                    ++edges;
                }
        if (edges != 6) return false;
        int center = -1;
        for (int i = 0; i < 7; ++i) {
            if (deg[i] == 3) {
                if (center >= 0) return false;
                center = i;
            } else if (deg[i] != 1 && deg[i] != 2) {
                return false;
            }
        }
        if (center < 0) return false;
        for (int i = 0; i < 7; ++i) {
            if (i == center) continue;
            bool adj_center = g.adjacent(pick[i], pick[center]);
            if (deg[i] == 2 && !adj_center) return false;
            if (deg[i] == 1 && adj_center) return false;
        }
        // middles pairwise nonadjacent and leaves pairwise nonadjacent, which
        // forces a perfect middle-leaf matching
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (i != center && j != center && deg[i] == deg[j] &&
                    g.adjacent(pick[i], pick[j]))
                    return false;
        return true;
    };
    // enumerate 7-subsets
    for (pick[0] = 0; pick[0] < n; ++pick[0])
        for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
            for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
                for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
                    for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4])
                        for (pick[5] = pick[4] + 1; pick[5] < n; ++pick[5])
                            for (pick[6] = pick[5] + 1; pick[6] < n; ++pick[6])
                                if (induces_t2()) return true;
    return false;
}

}  // namespace cohwl::oracles

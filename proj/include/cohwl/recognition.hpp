#pragma once

#include <array>
#include <optional>

#include "cohwl/graph.hpp"

namespace cohwl {

struct ClassVerdict {
    bool is_bipartite = false;
    bool is_chordal_bipartite = false;
    bool is_t2_free = false;
    std::optional<std::vector<Vertex>> odd_walk;        // when not bipartite
    std::optional<std::vector<Vertex>> induced_cycle;   // length >= 6, when not chordal bipartite
    std::optional<std::array<Vertex, 7>> claw;          // (c,x1,x2,x3,y1,y2,y3) inducing T2

    bool in_class() const { return is_bipartite && is_chordal_bipartite && is_t2_free; }
};

/// First (lexicographically smallest in search order) chordless cycle of
/// length >= 6, or nullopt. Exact backtracking; refuses graphs above the cap.
std::optional<std::vector<Vertex>> find_long_induced_cycle(const Graph& g, int cap = 64);

/// True iff g is bipartite with no induced cycle of length >= 6.
bool is_chordal_bipartite(const Graph& g, int cap = 64);

/// Tuple (c,x1,x2,x3,y1,y2,y3) inducing exactly the arcs {c-xi, xi-yi}, if any.
std::optional<std::array<Vertex, 7>> find_bipartite_claw(const Graph& g);

/// Adjacent pairs (a,b) such that the subgraph on aD u bD is complete
/// bipartite with parts aD and bD. Requires g bipartite.
std::vector<std::pair<Vertex, Vertex>> bisimplicial_pairs(const Graph& g);

ClassVerdict in_class(const Graph& g, int cap = 64);

/// True iff the vertices induce exactly a chordless cycle (in list order is
/// not required; checks degrees and connectivity of the induced subgraph).
bool verify_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle);

bool verify_claw(const Graph& g, const std::array<Vertex, 7>& t);

}  // namespace cohwl

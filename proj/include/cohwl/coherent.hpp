#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohwl/graph.hpp"

namespace cohwl {

using PairSet = std::vector<std::pair<Vertex, Vertex>>;

/// Total coloring of ordered pairs over 0..n-1. Colors are numbered by first
/// occurrence in a row-major scan, so equal partitions get equal matrices.
struct PairColoring {
    int n = 0;
    int k = 0;
    std::vector<int> color;  // n*n, row-major

    int at(Vertex u, Vertex v) const { return color[std::size_t(u) * n + v]; }

    /// Renumber colors canonically (first occurrence, row-major).
    void canonicalize();

    bool operator==(const PairColoring&) const = default;
};

/// Equivalence relation on 0..n-1 as a class-id-per-element vector; class ids
/// follow first occurrence.
struct Equivalence {
    int n = 0;
    std::vector<int> cls;

    int class_count() const;
    std::vector<VertexSet> classes() const;
    bool same(Vertex u, Vertex v) const { return cls[u] == cls[v]; }

    static Equivalence from_classes(int n, const std::vector<VertexSet>& classes);
    static std::optional<Equivalence> from_pairs(int n, const PairSet& pairs);  // nullopt if not an equivalence
    PairSet pairs() const;
};

/// Partition of one fiber by an equivalence on it.
struct EquivalenceOnFiber {
    VertexSet fiber;
    std::vector<VertexSet> classes;

    int count() const { return int(classes.size()); }
    bool same(Vertex u, Vertex v) const;
    /// Refinement order: *this subseteq other as pair sets.
    bool subset_of(const EquivalenceOnFiber& other) const;
    bool operator==(const EquivalenceOnFiber&) const = default;
};

struct CheckWitness;

/// Stable pair coloring together with the derived structure of a coherent
/// configuration. Construction is tolerant of non-coherent colorings (derived
/// fields come from representatives); verify_axioms is the authoritative test.
struct CoherentConfiguration {
    PairColoring coloring;
    std::vector<int> converse;                          // color -> color of swapped rep
    std::vector<char> diagonal;                         // color -> rep lies on diagonal
    std::vector<VertexSet> fibers;                      // grouped by diagonal color, first-occurrence order
    std::vector<int> fiber_of;                          // vertex -> fiber index
    std::vector<int> source, target;                    // color -> fiber index of rep
    std::vector<std::pair<Vertex, Vertex>> rep;         // color -> first pair, row-major
    std::vector<int> sizes;                             // color -> class size
    std::vector<std::vector<std::pair<std::int64_t, int>>> profiles;  // per t: sorted ((r*k+s), c_rs^t) from rep

    int n() const { return coloring.n; }
    int num_colors() const { return coloring.k; }

    explicit CoherentConfiguration(PairColoring c);

    /// c_rs^t computed at the representative pair of t.
    int intersection_number(int r, int s, int t) const;

    /// Class size of a color.
    int class_size(int t) const;
};

/// Coherent closure of the given relations plus singleton relations 1_a for
/// each individualized vertex, by pair-coloring stabilization. OpenMP-parallel
/// signature computation; output is schedule-independent.
CoherentConfiguration wl_closure(int n, const std::vector<PairSet>& relations,
                                 const VertexSet& individualized = {});

/// Straightforward serial implementation of the same refinement, kept as a
/// reference for testing and benchmarking.
CoherentConfiguration wl_closure_reference(int n, const std::vector<PairSet>& relations,
                                           const VertexSet& individualized = {});

/// Closure of a graph, optionally with its distinguished vertex individualized.
CoherentConfiguration closure_of(const Graph& g, std::optional<Vertex> alpha = std::nullopt);

struct AxiomReport {
    bool pass = true;
    std::string axiom;       // "C1" | "C2" | "C3"
    std::string description; // witness, human-readable
};

/// Exhaustive check of (C1)-(C3) over all pairs and color triples.
AxiomReport verify_axioms(const CoherentConfiguration& c);

/// Restriction to a union of fibers.
CoherentConfiguration restriction(const CoherentConfiguration& c, const VertexSet& delta);

bool is_parabolic(const CoherentConfiguration& c, const PairSet& e);
bool is_parabolic(const CoherentConfiguration& c, const Equivalence& e);

/// Quotient modulo a parabolic: points are the classes of e, colors of c
/// merged exactly when they connect the same class pairs.
CoherentConfiguration quotient(const CoherentConfiguration& c, const Equivalence& e);

/// Graph twins: u ~ v iff N(u)\{u,v} = N(v)\{u,v}. Throws if the relation
/// fails transitivity (possible when adjacent and non-adjacent twins mix).
Equivalence graph_twins(const Graph& g);

/// Configuration twins: same fiber and identically colored to every third
/// point. Always a parabolic (asserted).
Equivalence twin_parabolic(const CoherentConfiguration& c);

/// Partition of delta by neighborhood traces in gamma (the relation e_{delta,gamma}).
EquivalenceOnFiber bipartite_twin_classes(const Graph& g, const VertexSet& delta,
                                          const VertexSet& gamma);

struct AlgebraicIso {
    std::vector<int> map;  // color of c -> color of c'
};

/// All color bijections preserving diagonal flags, converse, source/target
/// fiber sizes and every intersection number. Throws above the color cap.
std::vector<AlgebraicIso> algebraic_isomorphisms(const CoherentConfiguration& c,
                                                 const CoherentConfiguration& d,
                                                 int color_cap = 40);

/// Vertex bijection f with color'(f(u),f(v)) = phi(color(u,v)), if one exists.
std::optional<std::vector<Vertex>> induced_by_combinatorial(const CoherentConfiguration& c,
                                                            const CoherentConfiguration& d,
                                                            const AlgebraicIso& phi);

/// JSON dump {"n","colors","matrix","converse","diagonal","fibers"}.
std::string dump_configuration(const CoherentConfiguration& c);

}  // namespace cohwl

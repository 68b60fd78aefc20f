#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohwl/coherent.hpp"
#include "cohwl/graph.hpp"

namespace cohwl {

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<std::vector<Vertex>> witness;  // g-vertex -> h-vertex, arc-verified
    std::string evidence;                        // distinguishing invariant on refusal
};

struct JointSummary {
    /// Multiset of (color, class size restricted to that side).
    std::vector<std::pair<int, int>> left, right;

    bool equivalent() const { return left == right; }
};

/// Joint stabilization of g and h on their disjoint union with the arc sets
/// as a single relation and {a, b} pinned together.
JointSummary stable_joint_coloring(const Graph& g, Vertex a, const Graph& h, Vertex b);

/// Isomorphism decision for chordal bipartite claw-free graphs; refuses
/// out-of-class inputs. Positive verdicts carry an arc-verified bijection.
IsoVerdict iso_test(const Graph& g, const Graph& h);

/// Exhaustive backtracking over degree-compatible assignments.
std::optional<std::vector<Vertex>> brute_force_iso(const Graph& g, const Graph& h, int cap = 10);

bool verify_iso_witness(const Graph& g, const Graph& h, const std::vector<Vertex>& f);

struct out_of_class_error : graph_error {
    using graph_error::graph_error;
};

}  // namespace cohwl

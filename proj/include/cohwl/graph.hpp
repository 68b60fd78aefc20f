#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cohwl {

using Vertex = int;

/// Sorted, strictly increasing list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite simple undirected graph on vertices 0..n-1 with an optional
/// distinguished vertex. Adjacency is stored as bitset rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {
        if (n < 0) throw graph_error("negative vertex count");
    }

    int n() const { return n_; }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw graph_error("loop edge");
        set_bit(u, v);
        set_bit(v, u);
    }

    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[std::size_t(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    int degree(Vertex u) const {
        check_vertex(u);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(bits_[std::size_t(u) * words_ + w]);
        return d;
    }

    VertexSet neighbors(Vertex u) const {
        check_vertex(u);
        VertexSet out;
        for (Vertex v = 0; v < n_; ++v)
            if (adjacent(u, v)) out.push_back(v);
        return out;
    }

    const std::uint64_t* row(Vertex u) const { return bits_.data() + std::size_t(u) * words_; }
    int row_words() const { return words_; }

    int edge_count() const {
        int total = 0;
        for (Vertex u = 0; u < n_; ++u) total += degree(u);
        return total / 2;
    }

    /// Edges as ordered pairs with u < v.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// The full irreflexive symmetric arc set (both orientations).
    std::vector<std::pair<Vertex, Vertex>> arcs() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = 0; v < n_; ++v)
                if (u != v && adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    std::optional<Vertex> distinguished;

    void set_distinguished(Vertex a) {
        check_vertex(a);
        distinguished = a;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && bits_ == o.bits_ && distinguished == o.distinguished;
    }

private:
    void check_vertex(Vertex u) const {
        if (u < 0 || u >= n_) throw graph_error("vertex out of range");
    }
    void set_bit(Vertex u, Vertex v) { bits_[std::size_t(u) * words_ + v / 64] |= std::uint64_t(1) << (v % 64); }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// BFS distances from u; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex u);

/// Shortest-path distance, or nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// Induced subgraph on delta, vertices renumbered 0..|delta|-1 in delta order.
/// The returned VertexSet maps new indices back to the originals.
std::pair<Graph, VertexSet> induced_subgraph(const Graph& g, const VertexSet& delta);

struct Bipartition {
    bool bipartite = false;
    std::vector<int> side;         // per-vertex part label 0/1, valid when bipartite
    std::vector<Vertex> odd_walk;  // odd closed walk certificate otherwise
};

Bipartition bipartition(const Graph& g);

bool is_connected(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);

bool verify_odd_closed_walk(const Graph& g, const std::vector<Vertex>& walk);

}  // namespace cohwl

#include "cohwl/recognition.hpp"

#include <algorithm>
#include <functional>

namespace cohwl {

namespace {

// Extends a chordless path p0..pk (all interior chords excluded) looking for
// a chordless cycle of length >= 6 through p0. Vertices other than p0 are
// restricted to identifiers > p0, so iterating anchors in ascending order
// visits every chordless cycle at its minimum vertex.
bool extend_chordless(const Graph& g, std::vector<Vertex>& path, std::vector<Vertex>& out) {
    Vertex anchor = path.front();
    Vertex last = path.back();
    for (Vertex w = anchor + 1; w < g.n(); ++w) {
        if (!g.adjacent(last, w)) continue;
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (g.adjacent(path[i], w)) {
                chord = true;
                break;
            }
        if (chord) continue;
        if (g.adjacent(anchor, w)) {
            if (path.size() + 1 >= 6) {
                out = path;
                out.push_back(w);
                return true;
            }
            continue;  // closing early would chord any longer cycle through w
        }
        path.push_back(w);
        if (extend_chordless(g, path, out)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_long_induced_cycle(const Graph& g, int cap) {
    if (g.n() > cap) throw graph_error("induced-cycle search cap exceeded");
    for (Vertex a = 0; a < g.n(); ++a)
        for (Vertex b = a + 1; b < g.n(); ++b) {
            if (!g.adjacent(a, b)) continue;
            std::vector<Vertex> path{a, b}, out;
            if (extend_chordless(g, path, out)) return out;
        }
    return std::nullopt;
}

bool is_chordal_bipartite(const Graph& g, int cap) {
    return bipartition(g).bipartite && !find_long_induced_cycle(g, cap);
}

std::optional<std::array<Vertex, 7>> find_bipartite_claw(const Graph& g) {
    const int n = g.n();
    auto ok_middle_pair = [&](Vertex xi, Vertex xj) { return xi != xj && !g.adjacent(xi, xj); };
    for (Vertex c = 0; c < n; ++c) {
        if (g.degree(c) < 3) continue;
        VertexSet nc = g.neighbors(c);
        for (std::size_t i = 0; i < nc.size(); ++i)
            for (std::size_t j = i + 1; j < nc.size(); ++j)
                for (std::size_t k = j + 1; k < nc.size(); ++k) {
                    Vertex x[3] = {nc[i], nc[j], nc[k]};
                    if (!ok_middle_pair(x[0], x[1]) || !ok_middle_pair(x[0], x[2]) ||
                        !ok_middle_pair(x[1], x[2]))
                        continue;
                    // pendant leaves: y_t adjacent to x_t only, pairwise nonadjacent
                    Vertex y[3] = {-1, -1, -1};
                    auto leaf_ok = [&](int t, Vertex v) {
                        if (v == c || g.adjacent(v, c)) return false;
                        for (int s = 0; s < 3; ++s) {
                            if (v == x[s]) return false;
                            if (g.adjacent(v, x[s]) != (s == t)) return false;
                        }
                        for (int s = 0; s < t; ++s)
                            if (v == y[s] || g.adjacent(v, y[s])) return false;
                        return true;
                    };
                    std::function<bool(int)> pick = [&](int t) -> bool {
                        if (t == 3) return true;
                        for (Vertex v = 0; v < n; ++v)
                            if (leaf_ok(t, v)) {
                                y[t] = v;
                                if (pick(t + 1)) return true;
                                y[t] = -1;
                            }
                        return false;
                    };
                    if (pick(0))
                        return std::array<Vertex, 7>{c, x[0], x[1], x[2], y[0], y[1], y[2]};
                }
    }
    return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> bisimplicial_pairs(const Graph& g) {
    if (!bipartition(g).bipartite) throw graph_error("bisimplicial_pairs requires a bipartite graph");
    std::vector<std::pair<Vertex, Vertex>> out;
    const int words = g.row_words();
    for (auto [a, b] : g.edges()) {
        bool complete = true;
        for (Vertex c : g.neighbors(a)) {
            // need N(b) subseteq N(c); a,b adjacent so N(a) and N(b) are disjoint
            for (int w = 0; complete && w < words; ++w)
                if (g.row(b)[w] & ~g.row(c)[w]) complete = false;
            if (!complete) break;
        }
        if (complete) out.emplace_back(a, b);
    }
    return out;
}

ClassVerdict in_class(const Graph& g, int cap) {
    ClassVerdict v;
    auto bp = bipartition(g);
    v.is_bipartite = bp.bipartite;
    if (!bp.bipartite) v.odd_walk = bp.odd_walk;
    auto cycle = find_long_induced_cycle(g, cap);
    v.is_chordal_bipartite = v.is_bipartite && !cycle;
    if (cycle) v.induced_cycle = *cycle;
    auto claw = find_bipartite_claw(g);
    v.is_t2_free = !claw;
    if (claw) v.claw = *claw;
    return v;
}

bool verify_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
    const std::size_t k = cycle.size();
    if (k < 6) return false;
    std::vector<Vertex> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

bool verify_claw(const Graph& g, const std::array<Vertex, 7>& t) {
    std::array<Vertex, 7> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    auto want = [&](int i, int j) {
        // arcs of T2 under numbering (c,x1,x2,x3,y1,y2,y3)
        return (i == 0 && j >= 1 && j <= 3) || (j >= 4 && i == j - 3);
    };
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (g.adjacent(t[i], t[j]) != want(i, j)) return false;
    return true;
}

}  // namespace cohwl

#include "cohwl/graph.hpp"

#include <algorithm>
#include <deque>

namespace cohwl {

std::vector<int> bfs_distances(const Graph& g, Vertex u) {
    std::vector<int> dist(g.n(), -1);
    std::deque<Vertex> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y = 0; y < g.n(); ++y)
            if (g.adjacent(x, y) && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) throw graph_error("vertex out of range");
    int d = bfs_distances(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

std::pair<Graph, VertexSet> induced_subgraph(const Graph& g, const VertexSet& delta) {
    VertexSet map = delta;
    std::sort(map.begin(), map.end());
    for (Vertex v : map)
        if (v < 0 || v >= g.n()) throw graph_error("vertex out of range");
    Graph sub(int(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = i + 1; j < map.size(); ++j)
            if (g.adjacent(map[i], map[j])) sub.add_edge(int(i), int(j));
    return {std::move(sub), std::move(map)};
}

Bipartition bipartition(const Graph& g) {
    Bipartition out;
    out.side.assign(g.n(), -1);
    std::vector<Vertex> parent(g.n(), -1);
    for (Vertex root = 0; root < g.n(); ++root) {
        if (out.side[root] >= 0) continue;
        out.side[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y = 0; y < g.n(); ++y) {
                if (!g.adjacent(x, y)) continue;
                if (out.side[y] < 0) {
                    out.side[y] = 1 - out.side[x];
                    parent[y] = x;
                    queue.push_back(y);
                } else if (out.side[y] == out.side[x]) {
                    // odd closed walk: x -> root -> y -> x through BFS parents
                    std::vector<Vertex> up_x, up_y;
                    for (Vertex t = x; t >= 0; t = parent[t]) up_x.push_back(t);
                    for (Vertex t = y; t >= 0; t = parent[t]) up_y.push_back(t);
                    out.odd_walk = up_x;  // x .. root
                    out.odd_walk.insert(out.odd_walk.end(), up_y.rbegin() + 1, up_y.rend());  // .. y
                    out.odd_walk.push_back(x);
                    out.bipartite = false;
                    out.side.clear();
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(g.n(), false);
    for (Vertex root = 0; root < g.n(); ++root) {
        if (seen[root]) continue;
        VertexSet comp;
        std::deque<Vertex> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            comp.push_back(x);
            for (Vertex y = 0; y < g.n(); ++y)
                if (g.adjacent(x, y) && !seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool verify_odd_closed_walk(const Graph& g, const std::vector<Vertex>& walk) {
    if (walk.size() < 4 || walk.front() != walk.back()) return false;
    if ((walk.size() - 1) % 2 == 0) return false;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.adjacent(walk[i], walk[i + 1])) return false;
    return true;
}

}  // namespace cohwl

#include "cohwl/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cohwl/recognition.hpp"

namespace cohwl {

namespace {

struct budget_exhausted {};

// Closure of the disjoint union of g and h with D u D' as one relation and
// each pin {(u,u),(v',v')} as a two-point diagonal relation, so pinned
// vertices start with a shared color.
CoherentConfiguration joint_closure(const Graph& g, const Graph& h,
                                    const std::vector<std::pair<Vertex, Vertex>>& pins) {
    const int n = g.n();
    PairSet arcs = g.arcs();
    for (auto [u, v] : h.arcs()) arcs.emplace_back(u + n, v + n);
    std::vector<PairSet> relations{std::move(arcs)};
    for (auto [u, v] : pins) relations.push_back({{u, u}, {v + n, v + n}});
    return wl_closure(2 * n, relations);
}

// per-color pair counts restricted to each side
JointSummary summarize(const CoherentConfiguration& c, int n) {
    JointSummary s;
    std::map<int, int> left, right;
    for (Vertex u = 0; u < 2 * n; ++u)
        for (Vertex v = 0; v < 2 * n; ++v) {
            if (u < n && v < n) ++left[c.coloring.at(u, v)];
            if (u >= n && v >= n) ++right[c.coloring.at(u, v)];
        }
    s.left.assign(left.begin(), left.end());
    s.right.assign(right.begin(), right.end());
    return s;
}

// Individualization-refinement witness search on one connected pair. Pins a
// matched diagonal color pair, re-stabilizes, and backtracks within budget.
std::optional<std::vector<Vertex>> extract_witness(const Graph& g, const Graph& h,
                                                   std::vector<std::pair<Vertex, Vertex>>& pins,
                                                   int& budget) {
    if (budget-- <= 0) throw budget_exhausted{};
    const int n = g.n();
    CoherentConfiguration c = joint_closure(g, h, pins);
    if (!summarize(c, n).equivalent()) return std::nullopt;
    // group vertices by diagonal color
    std::map<int, std::pair<VertexSet, VertexSet>> groups;
    for (Vertex u = 0; u < n; ++u) groups[c.coloring.at(u, u)].first.push_back(u);
    for (Vertex v = 0; v < n; ++v) groups[c.coloring.at(v + n, v + n)].second.push_back(v);
    const std::pair<const int, std::pair<VertexSet, VertexSet>>* split = nullptr;
    for (const auto& kv : groups) {
        if (kv.second.first.size() != kv.second.second.size()) return std::nullopt;
        if (!split && kv.second.first.size() > 1) split = &kv;
    }
    if (!split) {
        std::vector<Vertex> f(n);
        for (const auto& kv : groups) f[kv.second.first[0]] = kv.second.second[0];
        if (!verify_iso_witness(g, h, f)) return std::nullopt;
        return f;
    }
    Vertex u = split->second.first[0];
    for (Vertex v : split->second.second) {
        pins.emplace_back(u, v);
        auto res = extract_witness(g, h, pins, budget);
        pins.pop_back();
        if (res) return res;
    }
    return std::nullopt;
}

struct ConnectedResult {
    bool equivalent = false;
    std::optional<std::vector<Vertex>> witness;
    bool budget_breached = false;
};

ConnectedResult connected_iso(const Graph& g, const Graph& h) {
    ConnectedResult out;
    if (g.n() != h.n()) return out;
    const Vertex alpha = 0;
    for (Vertex beta = 0; beta < h.n(); ++beta) {
        if (!stable_joint_coloring(g, alpha, h, beta).equivalent()) continue;
        out.equivalent = true;
        std::vector<std::pair<Vertex, Vertex>> pins{{alpha, beta}};
        int budget = g.n() * g.n() + 1;
        try {
            out.witness = extract_witness(g, h, pins, budget);
        } catch (const budget_exhausted&) {
            out.budget_breached = true;
        }
        if (out.witness) return out;
    }
    return out;
}

}  // namespace

JointSummary stable_joint_coloring(const Graph& g, Vertex a, const Graph& h, Vertex b) {
    if (g.n() != h.n()) throw graph_error("stable_joint_coloring requires equal vertex counts");
    std::vector<std::pair<Vertex, Vertex>> pins{{a, b}};
    return summarize(joint_closure(g, h, pins), g.n());
}

bool verify_iso_witness(const Graph& g, const Graph& h, const std::vector<Vertex>& f) {
    if (int(f.size()) != g.n() || g.n() != h.n()) return false;
    std::vector<char> hit(h.n(), 0);
    for (Vertex x : f) {
        if (x < 0 || x >= h.n() || hit[x]) return false;
        hit[x] = 1;
    }
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v)
            if (g.adjacent(u, v) != h.adjacent(f[u], f[v])) return false;
    return true;
}

IsoVerdict iso_test(const Graph& g, const Graph& h) {
    ClassVerdict vg = in_class(g), vh = in_class(h);
    if (!vg.in_class() || !vh.in_class())
        throw out_of_class_error("iso_test requires chordal bipartite claw-free inputs");
    IsoVerdict out;
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) {
        out.evidence = "vertex or edge count mismatch";
        return out;
    }
    auto gc = connected_components(g);
    auto hc = connected_components(h);
    if (gc.size() != hc.size()) {
        out.evidence = "component count mismatch";
        return out;
    }
    std::vector<Vertex> f(g.n(), -1);
    std::vector<bool> used(hc.size(), false);
    for (const auto& comp : gc) {
        auto [sub_g, map_g] = induced_subgraph(g, comp);
        bool matched = false;
        for (std::size_t j = 0; j < hc.size() && !matched; ++j) {
            if (used[j] || hc[j].size() != comp.size()) continue;
            auto [sub_h, map_h] = induced_subgraph(h, hc[j]);
            ConnectedResult res = connected_iso(sub_g, sub_h);
            if (!res.equivalent) continue;
            if (!res.witness) {
                out.isomorphic = true;
                out.evidence = res.budget_breached
                                   ? "equivalent-but-unwitnessed: extraction budget exhausted"
                                   : "equivalent-but-unwitnessed";
                return out;
            }
            used[j] = true;
            matched = true;
            for (std::size_t i = 0; i < comp.size(); ++i) f[map_g[i]] = map_h[(*res.witness)[i]];
        }
        if (!matched) {
            out.evidence = "component with no stable-coloring match";
            return out;
        }
    }
    if (!verify_iso_witness(g, h, f)) throw graph_error("internal error: witness failed verification");
    out.isomorphic = true;
    out.witness = std::move(f);
    return out;
}

std::optional<std::vector<Vertex>> brute_force_iso(const Graph& g, const Graph& h, int cap) {
    if (g.n() > cap || h.n() > cap) throw graph_error("brute force cap exceeded");
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    const int n = g.n();
    std::vector<Vertex> f(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(Vertex)> go = [&](Vertex u) -> bool {
        if (u == n) return true;
        for (Vertex x = 0; x < n; ++x) {
            if (used[x] || g.degree(u) != h.degree(x)) continue;
            bool ok = true;
            for (Vertex v = 0; v < u && ok; ++v)
                if (g.adjacent(u, v) != h.adjacent(x, f[v])) ok = false;
            if (!ok) continue;
            f[u] = x;
            used[x] = 1;
            if (go(u + 1)) return true;
            used[x] = 0;
            f[u] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return f;
}

}  // namespace cohwl

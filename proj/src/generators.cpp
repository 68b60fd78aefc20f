#include "cohwl/generators.hpp"

#include <algorithm>
#include <charconv>

#include "cohwl/graph6.hpp"

namespace cohwl {

Graph gen_mkab(int m, int a, int b) {
    if (m < 1 || a < 1 || b < 1) throw graph_error("gen_mkab parameters must be positive");
    Graph g(m * (a + b));
    for (int c = 0; c < m; ++c) {
        int base = c * (a + b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) g.add_edge(base + i, base + a + j);
    }
    return g;
}

Graph gen_chain_graph(const std::vector<int>& sizes) {
    if (sizes.empty()) throw graph_error("gen_chain_graph needs at least one size");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] > sizes[i - 1]) throw graph_error("chain graph sizes must be nonincreasing");
    if (sizes.back() < 1) throw graph_error("chain graph sizes must be positive");
    const int a = int(sizes.size());
    const int b = sizes.front();
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < sizes[i]; ++j) g.add_edge(i, a + j);
    return g;
}

Graph gen_caterpillar(int spine, const std::vector<int>& leaves) {
    if (spine < 1) throw graph_error("caterpillar needs a spine");
    int extra = 0;
    for (int l : leaves) {
        if (l < 0) throw graph_error("negative leaf count");
        extra += l;
    }
    Graph g(spine + extra);
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    int next = spine;
    for (std::size_t i = 0; i < leaves.size() && int(i) < spine; ++i)
        for (int l = 0; l < leaves[i]; ++l) g.add_edge(int(i), next++);
    return g;
}

std::optional<Graph> gen_rejection(int n, double p, std::uint64_t seed) {
    if (n < 1 || n > 40) throw graph_error("gen_rejection supports 1 <= n <= 40");
    Rng rng(seed);
    const int a = (n + 1) / 2;
    Graph g(n);
    for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j)
            if (rng.uniform() < p) g.add_edge(i, j);
    if (!in_class(g).in_class()) return std::nullopt;
    return g;
}

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw graph_error("bad number in graph name");
    return v;
}

}  // namespace

Graph named(const std::string& name) {
    if (name == "T2") {
        // c=0, middles x_i=1..3, leaves y_i=4..6
        Graph g(7);
        for (int i = 1; i <= 3; ++i) {
            g.add_edge(0, i);
            g.add_edge(i, i + 3);
        }
        return g;
    }
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'P')) {
        int k = parse_int(std::string_view(name).substr(1));
        if (k < 1 || (name[0] == 'C' && k < 3)) throw graph_error("bad cycle/path length");
        Graph g(k);
        for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
        if (name[0] == 'C') g.add_edge(k - 1, 0);
        return g;
    }
    if (name.size() >= 2 && name[0] == 'K') {
        std::string_view rest(name);
        rest.remove_prefix(1);
        if (rest.starts_with("_{") && rest.ends_with("}")) rest = rest.substr(2, rest.size() - 3);
        auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw graph_error("unknown graph name: " + name);
        return gen_mkab(1, parse_int(rest.substr(0, comma)), parse_int(rest.substr(comma + 1)));
    }
    throw graph_error("unknown graph name: " + name);
}

nlohmann::ordered_json CorpusEntry::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["params"] = params;
    j["seed"] = seed;
    j["graph6"] = emit_graph6(graph);
    j["in_class"] = {{"bipartite", verdict.is_bipartite},
                     {"chordal_bipartite", verdict.is_chordal_bipartite},
                     {"t2_free", verdict.is_t2_free}};
    return j;
}

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed, int rejection_target) {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string family, nlohmann::ordered_json params, std::uint64_t s, Graph g) {
        CorpusEntry e;
        e.family = std::move(family);
        e.params = std::move(params);
        e.seed = s;
        e.verdict = in_class(g);
        e.graph = std::move(g);
        out.push_back(std::move(e));
    };
    for (const char* nm : {"T2", "C4", "C6", "C8", "P2", "P3", "P4", "P5", "P6", "P7",
                           "K_{1,1}", "K_{1,3}", "K_{2,2}", "K_{2,3}", "K_{3,3}", "K_{4,4}"})
        add("named", {{"name", nm}}, 0, named(nm));
    {
        // T2 with one middle edge subdivided: an out-of-class adversary
        Graph g(8);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_edge(1, 7);
        g.add_edge(7, 4);
        g.add_edge(2, 5);
        g.add_edge(3, 6);
        add("named", {{"name", "T2_subdivided"}}, 0, std::move(g));
    }
    for (int m = 1; m <= 3; ++m)
        for (int a = 1; a <= 3; ++a)
            for (int b = a; b <= 3; ++b)
                add("mkab", {{"m", m}, {"a", a}, {"b", b}}, 0, gen_mkab(m, a, b));
    // chain graphs up to n = 16 over a fixed set of nonincreasing profiles
    {
        std::vector<std::vector<int>> profiles = {
            {1},          {2, 1},       {3, 2, 1},    {4, 3, 2, 1}, {5, 4, 3, 2, 1},
            {3, 3, 3},    {4, 4, 2, 1}, {5, 3, 1},    {6, 5, 3},    {8, 4, 2, 1},
            {7, 7},       {5, 5, 5},    {6, 4, 4, 2}, {2, 2, 2, 2}, {9, 6, 1},
        };
        for (const auto& p : profiles)
            if (int(p.size()) + p.front() <= 16) add("chain", {{"sizes", p}}, 0, gen_chain_graph(p));
    }
    // caterpillars up to n = 16
    {
        std::vector<std::pair<int, std::vector<int>>> cats = {
            {1, {3}},       {5, {}},           {5, {0, 1, 0, 1, 0}}, {3, {2, 2, 2}},
            {4, {1, 0, 0, 1}}, {6, {1, 1, 1, 1, 1, 1}}, {2, {3, 3}},  {7, {0, 2, 0, 2, 0, 2, 0}},
            {4, {3, 0, 0, 3}}, {8, {1, 0, 1, 0, 1, 0, 1, 0}}, {3, {4, 4, 4}}, {10, {}},
        };
        for (const auto& [s, l] : cats)
            add("caterpillar", {{"spine", s}, {"leaves", l}}, 0, gen_caterpillar(s, l));
    }
    // seeded rejection samples over a spread of sizes and densities
    int accepted = 0;
    std::uint64_t attempt_seed = seed;
    while (accepted < rejection_target) {
        ++attempt_seed;
        Rng pick(attempt_seed);
        int n = 4 + int(pick.below(37));  // 4..40
        double p = 0.1 + 0.8 * pick.uniform();
        if (auto g = gen_rejection(n, p, attempt_seed)) {
            add("rejection", {{"n", n}, {"p", p}}, attempt_seed, std::move(*g));
            ++accepted;
        }
    }
    return out;
}

Graph relabel(const Graph& g, Rng& rng) {
    const int n = g.n();
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(std::uint64_t(i) + 1)]);
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    if (g.distinguished) h.set_distinguished(perm[*g.distinguished]);
    return h;
}

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) g.add_edge(u, v);
    return g;
}

}  // namespace cohwl

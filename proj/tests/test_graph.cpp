#include <doctest.h>

#include "cohwl/generators.hpp"
#include "cohwl/graph.hpp"
#include "cohwl/graph6.hpp"

using namespace cohwl;

namespace {

// test-local graph6 encoder, written from the format description rather than
// sharing code with emit_graph6
std::string independent_graph6(const Graph& g) {
    std::string bits;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? '1' : '0');
    while (bits.size() % 6) bits.push_back('0');
    std::string out(1, char(g.n() + 63));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (int b = 0; b < 6; ++b) val = val * 2 + (bits[i + b] - '0');
        out.push_back(char(val + 63));
    }
    return out;
}

}  // namespace

TEST_CASE("graph6 parse: smallest graphs") {
    Graph g = parse_graph6("A_");
    CHECK(g.n() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.distinguished.has_value());

    Graph empty5 = parse_graph6("D??");
    CHECK(empty5.n() == 5);
    CHECK(empty5.edge_count() == 0);
}

TEST_CASE("graph6 emit: trivial graphs") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(named("K1,1")) == "A_");
}

TEST_CASE("graph6 roundtrip of C6 against an independent encoder") {
    Graph c6 = named("C6");
    std::string expected = independent_graph6(c6);
    CHECK(emit_graph6(c6) == expected);
    CHECK(parse_graph6(expected) == c6);
}

TEST_CASE("graph6 parse errors are distinct") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("D?"), parse_error);    // truncated bit vector
    CHECK_THROWS_AS(parse_graph6("A_?"), parse_error);   // trailing garbage
    CHECK_THROWS_AS(parse_graph6("A\x1f"), parse_error); // byte below 63
}

TEST_CASE("graph6 roundtrip property on seeded random graphs") {
    for (int i = 0; i < 200; ++i) {
        Graph g = gen_random_graph(1 + i % 70, 0.02 * (i % 45), 77 + i);
        CAPTURE(i);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 long form for n > 62") {
    Graph g = gen_random_graph(80, 0.1, 5);
    std::string enc = emit_graph6(g);
    CHECK(enc[0] == 126);
    CHECK(parse_graph6(enc) == g);
}

TEST_CASE("JSON graph roundtrip carries the distinguished vertex") {
    Graph g = named("C6");
    g.set_distinguished(3);
    Graph back = parse_json_graph(emit_json_graph(g));
    CHECK(back == g);
    CHECK(back.distinguished == 3);
    CHECK_THROWS_AS(parse_json_graph("not json"), parse_error);
    CHECK_THROWS_AS(parse_json_graph("{\"edges\":[]}"), parse_error);
}

TEST_CASE("distance basics") {
    Graph p4 = named("P4");
    CHECK(distance(p4, 0, 3) == 3);
    CHECK(distance(p4, 1, 1) == 0);
    CHECK_THROWS_AS(distance(p4, 0, 9), graph_error);

    Graph matching = gen_mkab(2, 1, 1);
    CHECK_FALSE(distance(matching, 0, 2).has_value());
}

TEST_CASE("distance symmetry and triangle inequality on random graphs") {
    for (int i = 0; i < 30; ++i) {
        Graph g = gen_random_graph(10, 0.25, 900 + i);
        for (int u = 0; u < g.n(); ++u) {
            auto du = bfs_distances(g, u);
            for (int v = 0; v < g.n(); ++v) {
                CHECK(du[v] == bfs_distances(g, v)[u]);
                if (du[v] < 0) continue;
                for (int w = 0; w < g.n(); ++w) {
                    auto dv = bfs_distances(g, v);
                    if (dv[w] >= 0) CHECK(bfs_distances(g, u)[w] <= du[v] + dv[w]);
                }
            }
        }
    }
}

TEST_CASE("induced subgraph") {
    Graph c6 = named("C6");
    auto [p3, map3] = induced_subgraph(c6, {0, 1, 2});
    CHECK(p3.n() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));

    auto [all, mapall] = induced_subgraph(c6, {0, 1, 2, 3, 4, 5});
    CHECK(all == c6);

    Graph k33 = named("K3,3");
    auto [part, mp] = induced_subgraph(k33, {0, 1, 2});
    CHECK(part.edge_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(c6, {7}), graph_error);
}

TEST_CASE("induced subgraph preserves adjacency on random graphs") {
    for (int i = 0; i < 20; ++i) {
        Graph g = gen_random_graph(12, 0.3, 1500 + i);
        Rng rng(i);
        VertexSet delta;
        for (int v = 0; v < g.n(); ++v)
            if (rng.uniform() < 0.5) delta.push_back(v);
        auto [sub, map] = induced_subgraph(g, delta);
        for (int a = 0; a < sub.n(); ++a)
            for (int b = 0; b < sub.n(); ++b)
                if (a != b) CHECK(sub.adjacent(a, b) == g.adjacent(map[a], map[b]));
    }
}

TEST_CASE("bipartition") {
    auto c6 = bipartition(named("C6"));
    REQUIRE(c6.bipartite);
    int zeros = 0;
    for (int s : c6.side) zeros += s == 0;
    CHECK(zeros == 3);

    auto c5 = bipartition(named("C5"));
    REQUIRE_FALSE(c5.bipartite);
    CHECK(verify_odd_closed_walk(named("C5"), c5.odd_walk));
    CHECK(c5.odd_walk.size() >= 4);

    Graph t2 = named("T2");
    auto bt = bipartition(t2);
    REQUIRE(bt.bipartite);
    // parts: {center, leaves} vs {middles}
    CHECK(bt.side[1] == bt.side[2]);
    CHECK(bt.side[1] == bt.side[3]);
    CHECK(bt.side[0] != bt.side[1]);
    CHECK(bt.side[0] == bt.side[4]);
    CHECK(bt.side[0] == bt.side[5]);
    CHECK(bt.side[0] == bt.side[6]);
}

TEST_CASE("odd walk certificate verifies on random non-bipartite graphs") {
    int found = 0;
    for (int i = 0; i < 40; ++i) {
        Graph g = gen_random_graph(9, 0.3, 2500 + i);
        auto bp = bipartition(g);
        if (bp.bipartite) continue;
        ++found;
        CHECK(verify_odd_closed_walk(g, bp.odd_walk));
    }
    CHECK(found > 10);
}

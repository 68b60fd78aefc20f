#include <doctest.h>

#include "cohwl/generators.hpp"
#include "cohwl/oracles.hpp"
#include "cohwl/recognition.hpp"

using namespace cohwl;

TEST_CASE("chordal bipartite: small named graphs") {
    CHECK(is_chordal_bipartite(named("C4")));
    CHECK(is_chordal_bipartite(named("K4,4")));
    CHECK(is_chordal_bipartite(named("T2")));
    CHECK_FALSE(is_chordal_bipartite(named("C6")));
    CHECK_FALSE(is_chordal_bipartite(named("C8")));
}

TEST_CASE("find_long_induced_cycle certificate on C6") {
    Graph c6 = named("C6");
    auto cyc = find_long_induced_cycle(c6);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 6);
    CHECK(verify_induced_cycle(c6, *cyc));
}

TEST_CASE("induced cycle search agrees with the exhaustive oracle") {
    for (int i = 0; i < 300; ++i) {
        Graph g = gen_random_graph(3 + i % 10, 0.1 + 0.05 * (i % 14), 41000 + i);
        auto fast = find_long_induced_cycle(g);
        bool oracle = oracles::has_long_induced_cycle(g);
        CAPTURE(i);
        CHECK(fast.has_value() == oracle);
        if (fast) CHECK(verify_induced_cycle(g, *fast));
    }
}

TEST_CASE("bipartite claw: named graphs") {
    Graph t2 = named("T2");
    auto claw = find_bipartite_claw(t2);
    REQUIRE(claw.has_value());
    CHECK(verify_claw(t2, *claw));
    // identity embedding is lexicographically first
    CHECK(*claw == std::array<Vertex, 7>{0, 1, 2, 3, 4, 5, 6});

    CHECK_FALSE(find_bipartite_claw(named("K1,6")).has_value());
    CHECK_FALSE(find_bipartite_claw(named("C8")).has_value());
    for (int k = 3; k <= 6; ++k) {
        Graph g = named("P" + std::to_string(k));
        CHECK_FALSE(find_bipartite_claw(g).has_value());
    }
}

TEST_CASE("graphs with fewer than 7 vertices never contain T2") {
    for (int i = 0; i < 120; ++i) {
        Graph g = gen_random_graph(1 + i % 6, 0.5, 600 + i);
        CHECK_FALSE(find_bipartite_claw(g).has_value());
    }
}

TEST_CASE("claw search agrees with the exhaustive 7-subset oracle") {
    for (int i = 0; i < 250; ++i) {
        Graph g = gen_random_graph(7 + i % 6, 0.08 + 0.04 * (i % 10), 90000 + i);
        auto fast = find_bipartite_claw(g);
        CAPTURE(i);
        CHECK(fast.has_value() == oracles::has_claw_7subset(g));
        if (fast) CHECK(verify_claw(g, *fast));
    }
}

TEST_CASE("bisimplicial pairs") {
    Graph k23 = named("K2,3");
    auto bp = bisimplicial_pairs(k23);
    CHECK(bp.size() == k23.edge_count());  // every edge of a complete bipartite graph

    CHECK(bisimplicial_pairs(named("C6")).empty());
    CHECK(bisimplicial_pairs(named("C8")).empty());

    // a chordal bipartite graph with edges always has a bisimplicial edge
    for (int i = 0; i < 200; ++i) {
        auto g = gen_rejection(4 + i % 12, 0.3 + 0.03 * (i % 10), 3200 + i);
        if (!g || g->edge_count() == 0) continue;
        if (!is_chordal_bipartite(*g)) continue;
        auto pairs = bisimplicial_pairs(*g);
        CAPTURE(i);
        CHECK_FALSE(pairs.empty());
        for (auto [a, b] : pairs) {
            CHECK(g->adjacent(a, b));
            // N(a) subset of N(c) for every c in N(b), and symmetrically
            for (Vertex c : g->neighbors(b))
                for (Vertex w : g->neighbors(a))
                    if (w != c) CHECK(g->adjacent(c, w));
        }
    }
}

TEST_CASE("in_class verdicts with certificates") {
    auto c5 = in_class(named("C5"));
    CHECK_FALSE(c5.in_class());
    CHECK_FALSE(c5.is_bipartite);
    CHECK(verify_odd_closed_walk(named("C5"), *c5.odd_walk));

    auto c8 = in_class(named("C8"));
    CHECK(c8.is_bipartite);
    CHECK_FALSE(c8.is_chordal_bipartite);
    CHECK(verify_induced_cycle(named("C8"), *c8.induced_cycle));

    auto t2 = in_class(named("T2"));
    CHECK(t2.is_chordal_bipartite);
    CHECK_FALSE(t2.is_t2_free);
    CHECK(verify_claw(named("T2"), *t2.claw));

    auto cat = in_class(gen_caterpillar(4, {1, 1, 1, 1}));
    CHECK(cat.in_class());

    auto chain = in_class(gen_chain_graph({3, 2, 1}));
    CHECK(chain.in_class());

    auto mkab = in_class(gen_mkab(3, 2, 3));
    CHECK(mkab.in_class());
}

TEST_CASE("in_class agrees with oracles on random graphs") {
    for (int i = 0; i < 200; ++i) {
        Graph g = gen_random_graph(4 + i % 9, 0.1 + 0.05 * (i % 12), 7100 + i);
        auto v = in_class(g);
        CAPTURE(i);
        CHECK(v.is_bipartite == bipartition(g).bipartite);
        if (v.is_bipartite) CHECK(v.is_chordal_bipartite == !oracles::has_long_induced_cycle(g));
        if (v.is_chordal_bipartite) CHECK(v.is_t2_free == !oracles::has_claw_7subset(g));
    }
}

#include <doctest.h>

#include "cohwl/generators.hpp"
#include "cohwl/isomorphism.hpp"
#include "cohwl/recognition.hpp"

using namespace cohwl;

TEST_CASE("relabeled C4 is isomorphic with a verified witness") {
    Graph g = named("C4");
    Rng rng(11);
    Graph h = relabel(g, rng);
    auto v = iso_test(g, h);
    REQUIRE(v.isomorphic);
    REQUIRE(v.witness.has_value());
    CHECK(verify_iso_witness(g, h, *v.witness));
}

TEST_CASE("P4 and K1,3 are not isomorphic") {
    auto v = iso_test(named("P4"), named("K1,3"));
    CHECK_FALSE(v.isomorphic);
    CHECK_FALSE(v.evidence.empty());
}

TEST_CASE("same degree sequence, different caterpillars") {
    // spine a-b-c with two leaves on b vs spine a-b-c-d with one leaf on b:
    // both have degree sequence (1,1,1,2,3) after padding; build 6-vertex pair
    Graph g1 = gen_caterpillar(4, {0, 2, 0, 0});
    Graph g2 = gen_caterpillar(4, {0, 1, 1, 0});
    REQUIRE(g1.n() == g2.n());
    REQUIRE(g1.edge_count() == g2.edge_count());
    auto v = iso_test(g1, g2);
    CHECK_FALSE(v.isomorphic);
    CHECK(brute_force_iso(g1, g2) == std::nullopt);
}

TEST_CASE("disconnected graphs decompose by components") {
    Graph g = gen_mkab(2, 1, 2);  // 2K_{1,2}
    Rng rng(99);
    Graph h = relabel(g, rng);
    auto v = iso_test(g, h);
    REQUIRE(v.isomorphic);
    CHECK(verify_iso_witness(g, h, *v.witness));

    // 2K_{1,2} vs K_{1,2} + K_{1,1} + K_1: same vertex count, different split
    Graph mixed(6);
    mixed.add_edge(0, 1);
    mixed.add_edge(0, 2);
    mixed.add_edge(3, 4);
    CHECK_FALSE(iso_test(g, mixed).isomorphic);
}

TEST_CASE("vertex and edge count mismatches refuse quickly") {
    CHECK_FALSE(iso_test(named("P4"), named("P5")).isomorphic);
    CHECK_FALSE(iso_test(named("K2,2"), named("P4")).isomorphic);
}

TEST_CASE("out-of-class inputs are refused with an exception") {
    CHECK_THROWS_AS(iso_test(named("C5"), named("C5")), out_of_class_error);
    CHECK_THROWS_AS(iso_test(named("C6"), named("C6")), out_of_class_error);
    CHECK_THROWS_AS(iso_test(named("T2"), named("T2")), out_of_class_error);
    CHECK_THROWS_AS(iso_test(named("P4"), named("C5")), out_of_class_error);
}

TEST_CASE("iso_test agrees with brute force on in-class pairs") {
    std::vector<Graph> pool;
    for (int i = 0; i < 500 && pool.size() < 40; ++i) {
        auto g = gen_rejection(4 + i % 6, 0.3 + 0.04 * (i % 10), 30000 + i);
        if (g) pool.push_back(*g);
    }
    REQUIRE(pool.size() >= 20);
    int compared = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size() && compared < 300; ++j) {
            if (pool[i].n() != pool[j].n()) continue;
            ++compared;
            auto fast = iso_test(pool[i], pool[j]);
            auto slow = brute_force_iso(pool[i], pool[j]);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(fast.isomorphic == slow.has_value());
            if (fast.witness) CHECK(verify_iso_witness(pool[i], pool[j], *fast.witness));
        }
    CHECK(compared >= 100);
}

TEST_CASE("relabeled self-pairs across generator families") {
    std::vector<Graph> graphs = {
        named("K3,3"),        named("P7"),
        gen_mkab(3, 2, 3),    gen_chain_graph({4, 3, 1}),
        gen_caterpillar(5, {1, 0, 2, 0, 1}),
    };
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (int s = 0; s < 6; ++s) {
            Rng rng(5000 + 10 * i + s);
            Graph h = relabel(graphs[i], rng);
            auto v = iso_test(graphs[i], h);
            CAPTURE(i);
            CAPTURE(s);
            REQUIRE(v.isomorphic);
            CHECK(verify_iso_witness(graphs[i], h, *v.witness));
        }
    }
}

TEST_CASE("stable_joint_coloring is anchor-symmetric on equivalent pins") {
    Graph g = named("P5");
    Rng rng(7);
    Graph h = relabel(g, rng);
    // find the image of vertex 0 under some isomorphism via brute force
    auto f = brute_force_iso(g, h);
    REQUIRE(f.has_value());
    auto sum = stable_joint_coloring(g, 0, h, (*f)[0]);
    CHECK(sum.equivalent());
    // P5 center pinned to an endpoint can never be equivalent
    auto bad = stable_joint_coloring(g, 2, h, (*f)[0]);
    CHECK_FALSE(bad.equivalent());
}

TEST_CASE("order of arguments does not matter") {
    Graph g = gen_chain_graph({3, 2, 1});
    Rng rng(31);
    Graph h = relabel(g, rng);
    auto a = iso_test(g, h);
    auto b = iso_test(h, g);
    CHECK(a.isomorphic);
    CHECK(b.isomorphic);
    CHECK(verify_iso_witness(h, g, *b.witness));
}

TEST_CASE("brute_force_iso sanity") {
    CHECK(brute_force_iso(named("K2,3"), named("K2,3")).has_value());
    // K2,3 relabeled so parts swap positions
    Graph k32(5);
    for (int i : {0, 1, 2})
        for (int j : {3, 4}) k32.add_edge(i, j);
    auto f = brute_force_iso(named("K2,3"), k32);
    REQUIRE(f.has_value());
    CHECK(verify_iso_witness(named("K2,3"), k32, *f));
    CHECK_FALSE(brute_force_iso(named("K2,3"), named("P5")).has_value());
    CHECK_THROWS_AS(brute_force_iso(Graph(11), Graph(11)), graph_error);
}

TEST_CASE("verify_iso_witness rejects non-bijections and arc breaks") {
    Graph g = named("C4");
    CHECK(verify_iso_witness(g, g, {0, 1, 2, 3}));
    CHECK(verify_iso_witness(g, g, {1, 2, 3, 0}));
    CHECK_FALSE(verify_iso_witness(g, g, {0, 0, 2, 3}));
    CHECK_FALSE(verify_iso_witness(g, g, {0, 2, 1, 3}));
    CHECK_FALSE(verify_iso_witness(g, g, {0, 1, 2}));
}

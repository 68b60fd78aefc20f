#include "cohwl/selftest.hpp"

#include <nlohmann/json.hpp>

#include "cohwl/coherent.hpp"
#include "cohwl/generators.hpp"
#include "cohwl/graph6.hpp"
#include "cohwl/isomorphism.hpp"
#include "cohwl/oracles.hpp"
#include "cohwl/recognition.hpp"
#include "cohwl/structure_checks.hpp"

namespace cohwl {

namespace {

void report(std::ostream& out, const std::string& suite, int cases, int failures) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["cases"] = cases;
    j["failures"] = failures;
    j["pass"] = failures == 0;
    out << j.dump() << "\n";
}

}  // namespace

bool selftest(std::ostream& out, bool quick) {
    bool ok = true;
    const int scale = quick ? 1 : 4;

    {  // graph6 roundtrip on seeded random graphs
        int fail = 0, cases = 0;
        for (int i = 0; i < 50 * scale; ++i) {
            Graph g = gen_random_graph(1 + i % 30, 0.3 + 0.01 * (i % 40), 1000 + i);
            ++cases;
            if (!(parse_graph6(emit_graph6(g)) == g)) ++fail;
        }
        report(out, "graph6_roundtrip", cases, fail);
        ok &= fail == 0;
    }
    {  // chordal-bipartite recognizer vs full subset enumeration
        int fail = 0, cases = 0;
        for (int i = 0; i < 60 * scale; ++i) {
            Graph g = gen_random_graph(4 + i % 8, 0.15 + 0.02 * (i % 30), 2000 + i);
            ++cases;
            bool fast = find_long_induced_cycle(g).has_value();
            if (fast != oracles::has_long_induced_cycle(g)) ++fail;
        }
        report(out, "induced_cycle_oracle", cases, fail);
        ok &= fail == 0;
    }
    {  // claw finder vs 7-subset scan
        int fail = 0, cases = 0;
        for (int i = 0; i < 60 * scale; ++i) {
            Graph g = gen_random_graph(7 + i % 6, 0.1 + 0.02 * (i % 30), 3000 + i);
            ++cases;
            auto claw = find_bipartite_claw(g);
            if (claw && !verify_claw(g, *claw)) ++fail;
            if (claw.has_value() != oracles::has_claw_7subset(g)) ++fail;
        }
        report(out, "claw_oracle", cases, fail);
        ok &= fail == 0;
    }
    {  // closure axioms + parallel/reference agreement on small corpus graphs
        int fail = 0, cases = 0;
        auto corpus = standard_corpus(20200530, 10 * scale);
        for (const auto& e : corpus) {
            if (e.graph.n() > 16) continue;
            ++cases;
            auto c = closure_of(e.graph, 0);
            if (!verify_axioms(c).pass) ++fail;
            auto ref = wl_closure_reference(e.graph.n(), {e.graph.arcs()}, {0});
            if (c.coloring != ref.coloring) ++fail;
        }
        report(out, "closure_axioms_and_reference", cases, fail);
        ok &= fail == 0;
    }
    {  // iso vs brute force on tiny in-class graphs
        int fail = 0, cases = 0;
        Rng rng(4000);
        std::vector<Graph> pool;
        auto corpus = standard_corpus(20200530, 10 * scale);
        for (const auto& e : corpus)
            if (e.graph.n() <= 8 && e.verdict.in_class()) pool.push_back(e.graph);
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = i; j < pool.size() && cases < 80 * scale; ++j) {
                if (pool[i].n() != pool[j].n()) continue;
                ++cases;
                Graph shuffled = relabel(pool[j], rng);
                bool fast = iso_test(pool[i], shuffled).isomorphic;
                bool truth = brute_force_iso(pool[i], shuffled).has_value();
                if (fast != truth) ++fail;
            }
        report(out, "iso_oracle", cases, fail);
        ok &= fail == 0;
    }
    {  // structure checkers pass on in-class instances, bound check rejects T2
        int fail = 0, cases = 0;
        auto corpus = standard_corpus(20200530, 10 * scale);
        for (const auto& e : corpus) {
            if (e.graph.n() > 14 || !e.verdict.in_class() || !is_connected(e.graph)) continue;
            Graph g = e.graph;
            g.set_distinguished(0);
            auto c = closure_of(g);
            for (const auto& r : run_all_checks(g, c)) {
                ++cases;
                if (!r.passed()) ++fail;
            }
        }
        Graph t2 = named("T2");
        t2.set_distinguished(0);
        ++cases;
        if (check_bound(t2, closure_of(t2)).verdict != Verdict::Skipped) ++fail;
        report(out, "structure_checks", cases, fail);
        ok &= fail == 0;
    }
    nlohmann::ordered_json j;
    j["selftest"] = ok ? "pass" : "fail";
    out << j.dump() << "\n";
    return ok;
}

}  // namespace cohwl

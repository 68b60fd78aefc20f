#include "cohwl/structure_checks.hpp"

#include <algorithm>

#include "cohwl/recognition.hpp"

namespace cohwl {

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "skipped";
    }
}

CheckReport skipped(const std::string& name, const std::string& reason, nlohmann::ordered_json cert = {}) {
    CheckReport r;
    r.check = name;
    r.verdict = Verdict::Skipped;
    r.witness["reason"] = reason;
    if (!cert.is_null()) r.witness["certificate"] = cert;
    return r;
}

// "skipped" with recognizer certificate when the class precondition fails
std::optional<CheckReport> class_precondition(const std::string& name, const Graph& g, bool need_t2_free) {
    if (!g.distinguished) return skipped(name, "no distinguished vertex");
    if (!is_connected(g)) return skipped(name, "graph is not connected");
    ClassVerdict v = in_class(g);
    if (!v.is_bipartite) {
        nlohmann::ordered_json cert;
        cert["odd_walk"] = *v.odd_walk;
        return skipped(name, "not bipartite", cert);
    }
    if (!v.is_chordal_bipartite) {
        nlohmann::ordered_json cert;
        cert["induced_cycle"] = *v.induced_cycle;
        return skipped(name, "not chordal bipartite", cert);
    }
    if (need_t2_free && !v.is_t2_free) {
        nlohmann::ordered_json cert;
        cert["claw"] = *v.claw;
        return skipped(name, "contains bipartite claw", cert);
    }
    return std::nullopt;
}

// components of the cross graph on delta u gamma restricted to cross arcs
std::vector<VertexSet> cross_components(const Graph& g, const VertexSet& delta, const VertexSet& gamma) {
    Graph cross(g.n());
    for (Vertex u : delta)
        for (Vertex v : gamma)
            if (g.adjacent(u, v)) cross.add_edge(u, v);
    std::vector<VertexSet> comps;
    for (auto& comp : connected_components(cross)) {
        bool relevant = comp.size() > 1;
        if (relevant) comps.push_back(std::move(comp));
    }
    return comps;
}

EquivalenceOnFiber trace_classes(const Graph& g, const CoherentConfiguration& c, int di, int gi) {
    if (di == gi) {
        // X_Delta is empty for closure fibers, so the trace is a single class
        EquivalenceOnFiber e;
        e.fiber = c.fibers[di];
        e.classes = {c.fibers[di]};
        return e;
    }
    return bipartite_twin_classes(g, c.fibers[di], c.fibers[gi]);
}

}  // namespace

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["verdict"] = verdict_name(verdict);
    j["witness"] = witness;
    j["stats"] = stats;
    return j;
}

CheckReport check_fiber_structure(const Graph& g, const CoherentConfiguration& c) {
    CheckReport r;
    r.check = "fiber_structure";
    if (!g.distinguished) return skipped(r.check, "no distinguished vertex");
    if (!is_connected(g)) return skipped(r.check, "graph is not connected");
    auto bp = bipartition(g);
    if (!bp.bipartite) return skipped(r.check, "not bipartite");
    const auto& F = c.fibers;
    int pairs = 0;
    auto fail = [&](const std::string& what, int di, int gi) {
        r.verdict = Verdict::Fail;
        r.witness["what"] = what;
        r.witness["fiber"] = F[di];
        if (gi >= 0) r.witness["other_fiber"] = F[gi];
        return r;
    };
    for (std::size_t di = 0; di < F.size(); ++di) {
        // fiber inside one part, X_Delta empty
        for (std::size_t i = 0; i < F[di].size(); ++i) {
            if (bp.side[F[di][i]] != bp.side[F[di][0]]) return fail("fiber_crosses_parts", int(di), -1);
            for (std::size_t j = i + 1; j < F[di].size(); ++j)
                if (g.adjacent(F[di][i], F[di][j])) return fail("within_fiber_arc", int(di), -1);
        }
        for (std::size_t gi = 0; gi < F.size(); ++gi) {
            if (di == gi) continue;
            ++pairs;
            // biregular cross graph
            int deg0 = -1;
            for (Vertex u : F[di]) {
                int d = 0;
                for (Vertex v : F[gi]) d += g.adjacent(u, v);
                if (deg0 < 0) deg0 = d;
                if (d != deg0) return fail("not_biregular", int(di), int(gi));
            }
            // constant distance to singleton fibers
            if (F[gi].size() == 1) {
                auto dist = bfs_distances(g, F[gi][0]);
                for (Vertex u : F[di])
                    if (dist[u] != dist[F[di][0]]) return fail("distance_not_constant", int(di), int(gi));
            }
        }
    }
    r.stats["fiber_pairs"] = pairs;
    return r;
}

CheckReport check_mkab(const Graph& g, const CoherentConfiguration& c) {
    CheckReport r;
    r.check = "mkab";
    if (auto skip = class_precondition(r.check, g, false)) return *skip;
    const auto& F = c.fibers;
    int pairs = 0;
    for (std::size_t di = 0; di < F.size(); ++di)
        for (std::size_t gi = di + 1; gi < F.size(); ++gi) {
            auto comps = cross_components(g, F[di], F[gi]);
            if (comps.empty()) continue;
            ++pairs;
            auto fail = [&](const std::string& what, nlohmann::ordered_json extra = {}) {
                r.verdict = Verdict::Fail;
                r.witness["what"] = what;
                r.witness["fiber"] = F[di];
                r.witness["other_fiber"] = F[gi];
                if (!extra.is_null()) r.witness["detail"] = extra;
                return r;
            };
            int a = -1, b = -1;
            for (const auto& comp : comps) {
                VertexSet in_d, in_g;
                for (Vertex u : comp)
                    (std::binary_search(F[di].begin(), F[di].end(), u) ? in_d : in_g).push_back(u);
                for (Vertex u : in_d)
                    for (Vertex v : in_g)
                        if (!g.adjacent(u, v)) return fail("component_not_complete_bipartite");
                if (a < 0) {
                    a = int(in_d.size());
                    b = int(in_g.size());
                } else if (a != int(in_d.size()) || b != int(in_g.size())) {
                    return fail("part_sizes_not_uniform");
                }
            }
            // e classes must both count the components and match them exactly
            auto edg = bipartite_twin_classes(g, F[di], F[gi]);
            auto egd = bipartite_twin_classes(g, F[gi], F[di]);
            int m = int(comps.size());
            if (edg.count() != m || egd.count() != m)
                return fail("class_count_mismatch",
                            {{"components", m}, {"e_dg", edg.count()}, {"e_gd", egd.count()}});
            for (const auto& comp : comps) {
                VertexSet in_d;
                for (Vertex u : comp)
                    if (std::binary_search(F[di].begin(), F[di].end(), u)) in_d.push_back(u);
                bool matched = std::any_of(edg.classes.begin(), edg.classes.end(),
                                           [&](const VertexSet& cl) { return cl == in_d; });
                if (!matched) return fail("class_component_mismatch");
            }
            r.stats["cross_graphs"].push_back({{"fiber", F[di]},
                                               {"other_fiber", F[gi]},
                                               {"m", int(comps.size())},
                                               {"a", a},
                                               {"b", b}});
        }
    r.stats["nonempty_fiber_pairs"] = pairs;
    return r;
}

CheckReport check_linear_order(const Graph& g, const CoherentConfiguration& c) {
    CheckReport r;
    r.check = "linear_order";
    if (auto skip = class_precondition(r.check, g, false)) return *skip;
    const auto& F = c.fibers;
    int examined = 0;
    for (std::size_t di = 0; di < F.size(); ++di) {
        std::vector<std::pair<EquivalenceOnFiber, int>> rel;
        for (std::size_t gi = 0; gi < F.size(); ++gi)
            rel.emplace_back(trace_classes(g, c, int(di), int(gi)), int(gi));
        // finest first
        std::stable_sort(rel.begin(), rel.end(),
                         [](const auto& a, const auto& b) { return a.first.count() > b.first.count(); });
        for (std::size_t i = 0; i + 1 < rel.size(); ++i) {
            ++examined;
            if (!rel[i].first.subset_of(rel[i + 1].first)) {
                r.verdict = Verdict::Fail;
                r.witness["what"] = "not_a_chain";
                r.witness["fiber"] = F[di];
                r.witness["gamma"] = F[rel[i].second];
                r.witness["lambda"] = F[rel[i + 1].second];
                return r;
            }
            if (rel[i].first.count() % rel[i + 1].first.count() != 0) {
                r.verdict = Verdict::Fail;
                r.witness["what"] = "count_not_divisible";
                r.witness["fiber"] = F[di];
                r.witness["counts"] = {rel[i].first.count(), rel[i + 1].first.count()};
                return r;
            }
        }
    }
    r.stats["chain_links"] = examined;
    return r;
}

CheckReport check_bound(const Graph& g, const CoherentConfiguration& c) {
    CheckReport r;
    r.check = "bound";
    if (auto skip = class_precondition(r.check, g, true)) return *skip;
    const auto& F = c.fibers;
    int pairs = 0;
    for (std::size_t di = 0; di < F.size(); ++di)
        for (std::size_t gi = 0; gi < F.size(); ++gi) {
            if (di == gi) continue;
            ++pairs;
            auto e = bipartite_twin_classes(g, F[di], F[gi]);
            if (e.count() > 2) {
                r.verdict = Verdict::Fail;
                r.witness["fiber"] = F[di];
                r.witness["other_fiber"] = F[gi];
                r.witness["class_count"] = e.count();
                r.witness["classes"] = e.classes;
                return r;
            }
        }
    r.stats["fiber_pairs"] = pairs;
    return r;
}

CheckReport check_twin_quotient(const Graph& g, const CoherentConfiguration& c) {
    CheckReport r;
    r.check = "twin_quotient";
    if (auto skip = class_precondition(r.check, g, true)) return *skip;
    Equivalence t = twin_parabolic(c);
    const auto& F = c.fibers;
    for (std::size_t di = 0; di < F.size(); ++di) {
        std::vector<int> seen;
        for (Vertex u : F[di])
            if (std::find(seen.begin(), seen.end(), t.cls[u]) == seen.end()) seen.push_back(t.cls[u]);
        if (seen.size() > 2) {
            r.verdict = Verdict::Fail;
            r.witness["what"] = "fiber_meets_more_than_two_twin_classes";
            r.witness["fiber"] = F[di];
            r.witness["twin_class_count"] = seen.size();
            return r;
        }
    }
    CoherentConfiguration q = quotient(c, t);
    for (const auto& fiber : q.fibers)
        if (fiber.size() > 2) {
            r.verdict = Verdict::Fail;
            r.witness["what"] = "quotient_fiber_too_large";
            r.witness["quotient_fiber"] = fiber;
            return r;
        }
    // the finest trace equivalence of each fiber sits inside the twin classes
    for (std::size_t di = 0; di < F.size(); ++di) {
        EquivalenceOnFiber finest = trace_classes(g, c, int(di), int(di));
        for (std::size_t gi = 0; gi < F.size(); ++gi) {
            auto e = trace_classes(g, c, int(di), int(gi));
            if (e.count() > finest.count()) finest = std::move(e);
        }
        for (const auto& cl : finest.classes)
            for (std::size_t i = 1; i < cl.size(); ++i)
                if (t.cls[cl[0]] != t.cls[cl[i]]) {
                    r.verdict = Verdict::Fail;
                    r.witness["what"] = "minimal_trace_not_in_twin_parabolic";
                    r.witness["fiber"] = F[di];
                    r.witness["pair"] = {cl[0], cl[i]};
                    return r;
                }
    }
    r.stats["fibers"] = F.size();
    r.stats["quotient_points"] = q.n();
    return r;
}

std::vector<CheckReport> run_all_checks(const Graph& g, const CoherentConfiguration& c) {
    return {check_fiber_structure(g, c), check_mkab(g, c), check_linear_order(g, c),
            check_bound(g, c), check_twin_quotient(g, c)};
}

}  // namespace cohwl

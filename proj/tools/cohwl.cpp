// cohwl: coherent configurations, coherent closure and structure checks for
// chordal bipartite claw-free graphs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cohwl/coherent.hpp"
#include "cohwl/generators.hpp"
#include "cohwl/graph6.hpp"
#include "cohwl/isomorphism.hpp"
#include "cohwl/recognition.hpp"
#include "cohwl/selftest.hpp"
#include "cohwl/structure_checks.hpp"

namespace {

using namespace cohwl;

Graph read_graph_line(const std::string& line, const std::string& format) {
    if (format == "json") return parse_json_graph(line);
    return parse_graph6(line);
}

Graph read_graph_arg(const std::string& arg) {
    // file path, inline graph6, or inline JSON
    if (!arg.empty() && arg[0] == '{') return parse_json_graph(arg);
    std::ifstream in(arg);
    if (in) {
        std::string line;
        std::getline(in, line);
        if (!line.empty() && line[0] == '{') return parse_json_graph(line);
        return parse_graph6(line);
    }
    return parse_graph6(arg);
}

nlohmann::ordered_json verdict_json(const ClassVerdict& v) {
    nlohmann::ordered_json j;
    j["is_bipartite"] = v.is_bipartite;
    j["is_chordal_bipartite"] = v.is_chordal_bipartite;
    j["is_t2_free"] = v.is_t2_free;
    j["in_class"] = v.in_class();
    if (v.odd_walk) j["odd_walk"] = *v.odd_walk;
    if (v.induced_cycle) j["induced_cycle"] = *v.induced_cycle;
    if (v.claw) j["claw"] = *v.claw;
    return j;
}

std::vector<Vertex> alphas_for(const Graph& g, int alpha, bool all_alpha, std::uint64_t seed) {
    std::vector<Vertex> out;
    if (alpha >= 0) {
        out.push_back(alpha);
    } else if (all_alpha || g.n() <= 20) {
        for (Vertex v = 0; v < g.n(); ++v) out.push_back(v);
    } else {
        Rng rng(seed);
        std::vector<char> taken(g.n(), 0);
        while (int(out.size()) < 8) {
            Vertex v = Vertex(rng.below(g.n()));
            if (!taken[v]) {
                taken[v] = 1;
                out.push_back(v);
            }
        }
        std::sort(out.begin(), out.end());
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent closure and structure checks for chordal bipartite claw-free graphs"};
    app.require_subcommand(1);

    std::uint64_t seed = 20200530;
    if (const char* env = std::getenv("COHWL_SEED")) seed = std::strtoull(env, nullptr, 10);

    std::string format = "graph6";
    std::string out_path, spec_path;
    int alpha = -1;
    bool all_alpha = false, quick = false;
    int rejection_target = 560;
    std::string iso_a, iso_b;
    int cycle_cap = 64;

    auto* gen = app.add_subcommand("gen", "write a corpus manifest (one JSON line per graph)");
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->add_option("--spec", spec_path, "JSON spec {\"seed\":..., \"rejection_target\":...}");
    gen->add_option("--rejection-target", rejection_target, "accepted rejection samples to include");

    auto* rec = app.add_subcommand("recognize", "class verdict JSON per input line");
    rec->add_option("--format", format, "graph6|json")->check(CLI::IsMember({"graph6", "json"}));
    rec->add_option("--cycle-cap", cycle_cap, "vertex cap for the induced-cycle search");

    auto* clo = app.add_subcommand("closure", "configuration dump per input line");
    clo->add_option("--format", format, "graph6|json")->check(CLI::IsMember({"graph6", "json"}));
    clo->add_option("--alpha", alpha, "individualized vertex (default: none)");

    auto* chk = app.add_subcommand("check", "run all structure checkers per input and alpha");
    chk->add_option("--format", format, "graph6|json")->check(CLI::IsMember({"graph6", "json"}));
    chk->add_option("--alpha", alpha, "single distinguished vertex");
    chk->add_flag("--all-alpha", all_alpha, "try every vertex regardless of size");

    auto* iso = app.add_subcommand("iso", "isomorphism test for two graphs (files or literals)");
    iso->add_option("A", iso_a)->required();
    iso->add_option("B", iso_b)->required();

    auto* st = app.add_subcommand("selftest", "hermetic oracle-agreement suites");
    st->add_flag("--quick", quick, "reduced sample sizes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (!spec_path.empty()) {
                std::ifstream in(spec_path);
                if (!in) throw graph_error("cannot open spec file");
                nlohmann::json spec = nlohmann::json::parse(in);
                if (spec.contains("seed")) seed = spec["seed"].get<std::uint64_t>();
                if (spec.contains("rejection_target")) rejection_target = spec["rejection_target"].get<int>();
            }
            std::ofstream file;
            std::ostream* out = &std::cout;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw graph_error("cannot open output file");
                out = &file;
            }
            for (const auto& e : standard_corpus(seed, rejection_target)) *out << e.to_json().dump() << "\n";
            return 0;
        }
        if (rec->parsed()) {
            std::string line;
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                std::cout << verdict_json(in_class(read_graph_line(line, format), cycle_cap)).dump() << "\n";
            }
            return 0;
        }
        if (clo->parsed()) {
            std::string line;
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                Graph g = read_graph_line(line, format);
                std::optional<Vertex> a;
                if (alpha >= 0) a = alpha;
                std::cout << dump_configuration(closure_of(g, a)) << "\n";
            }
            return 0;
        }
        if (chk->parsed()) {
            std::string line;
            bool any_fail = false;
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                Graph g = read_graph_line(line, format);
                std::string g6 = emit_graph6(g);
                for (Vertex a : alphas_for(g, alpha, all_alpha, seed)) {
                    Graph ga = g;
                    ga.set_distinguished(a);
                    auto c = closure_of(ga);
                    for (const auto& r : run_all_checks(ga, c)) {
                        nlohmann::ordered_json j = r.to_json();
                        j["graph"] = g6;
                        j["alpha"] = a;
                        std::cout << j.dump() << "\n";
                        any_fail |= r.verdict == Verdict::Fail;
                    }
                }
            }
            return any_fail ? 1 : 0;
        }
        if (iso->parsed()) {
            Graph a = read_graph_arg(iso_a), b = read_graph_arg(iso_b);
            try {
                IsoVerdict v = iso_test(a, b);
                if (v.isomorphic && v.witness) {
                    for (std::size_t i = 0; i < v.witness->size(); ++i)
                        std::cout << (i ? " " : "") << (*v.witness)[i];
                    std::cout << "\n";
                }
                if (!v.isomorphic) std::cerr << "not isomorphic: " << v.evidence << "\n";
                return v.isomorphic ? 0 : 1;
            } catch (const out_of_class_error& e) {
                std::cerr << e.what() << "\n";
                return 2;
            }
        }
        if (st->parsed()) return selftest(std::cout, quick) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

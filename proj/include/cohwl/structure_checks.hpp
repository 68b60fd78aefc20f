#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cohwl/coherent.hpp"
#include "cohwl/graph.hpp"

namespace cohwl {

enum class Verdict { Pass, Fail, Skipped };

struct CheckReport {
    std::string check;
    Verdict verdict = Verdict::Pass;
    nlohmann::ordered_json witness;  // counterexample on fail, certificate on skip
    nlohmann::ordered_json stats;

    bool passed() const { return verdict == Verdict::Pass; }
    nlohmann::ordered_json to_json() const;
};

/// Biregularity of every cross-fiber graph, constant distance to singleton
/// fibers, fibers within one part, empty within-fiber graphs.
/// Requires g connected bipartite with distinguished vertex; c its closure.
CheckReport check_fiber_structure(const Graph& g, const CoherentConfiguration& c);

/// Every nonempty cross-fiber graph is mK_{a,b} with m equal to the twin class
/// counts on both sides, and the classes match the components.
CheckReport check_mkab(const Graph& g, const CoherentConfiguration& c);

/// For each fiber, the trace equivalences toward all fibers form an inclusion
/// chain, with class counts dividing along it.
CheckReport check_linear_order(const Graph& g, const CoherentConfiguration& c);

/// Trace equivalences have at most 2 classes (in-class inputs only).
CheckReport check_bound(const Graph& g, const CoherentConfiguration& c);

/// Twin-parabolic quotient has fibers of size at most 2; the finest trace
/// equivalence of each fiber is contained in the twin classes.
CheckReport check_twin_quotient(const Graph& g, const CoherentConfiguration& c);

std::vector<CheckReport> run_all_checks(const Graph& g, const CoherentConfiguration& c);

}  // namespace cohwl

#pragma once

#include <string>

#include "cohwl/graph.hpp"

namespace cohwl {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse one line of standard graph6 (short or long n-encoding).
Graph parse_graph6(const std::string& text);

/// Emit standard graph6; the distinguished vertex is not representable and is dropped.
std::string emit_graph6(const Graph& g);

/// JSON edge list {"n":..., "edges":[[u,v],...], "distinguished":...}.
Graph parse_json_graph(const std::string& text);
std::string emit_json_graph(const Graph& g);

}  // namespace cohwl

#include "cohwl/graph6.hpp"

#include <nlohmann/json.hpp>

namespace cohwl {

namespace {

constexpr int kBias = 63;

bool data_byte(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    if (text.empty()) throw parse_error("empty graph6 line");
    long long n;
    if (text[0] == 126) {  // '~': long form
        if (text.size() >= 2 && text[1] == 126) {
            if (text.size() < 8) throw parse_error("malformed header: truncated 36-bit n");
            n = 0;
            for (int i = 2; i < 8; ++i) {
                if (!data_byte(text[i])) throw parse_error("malformed header: bad byte");
                n = (n << 6) | (text[i] - kBias);
            }
            pos = 8;
        } else {
            if (text.size() < 4) throw parse_error("malformed header: truncated 18-bit n");
            n = 0;
            for (int i = 1; i < 4; ++i) {
                if (!data_byte(text[i])) throw parse_error("malformed header: bad byte");
                n = (n << 6) | (text[i] - kBias);
            }
            pos = 4;
        }
    } else {
        if (!data_byte(text[0])) throw parse_error("malformed header: bad byte");
        n = text[0] - kBias;
        pos = 1;
    }
    if (n > 100000) throw parse_error("graph too large");
    Graph g{int(n)};
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if ((long long)text.size() - (long long)pos < nbytes) throw parse_error("truncated bit vector");
    if ((long long)text.size() - (long long)pos > nbytes) throw parse_error("trailing garbage");
    long long bit = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++bit) {
            char c = text[pos + bit / 6];
            if (!data_byte(c)) throw parse_error("bad data byte");
            if ((c - kBias) >> (5 - bit % 6) & 1) g.add_edge(u, v);
        }
    // padding bits must be zero
    for (; bit < nbytes * 6; ++bit)
        if ((text[pos + bit / 6] - kBias) >> (5 - bit % 6) & 1) throw parse_error("nonzero padding");
    return g;
}

std::string emit_graph6(const Graph& g) {
    long long n = g.n();
    if (n < 1) throw graph_error("emit_graph6 requires n >= 1");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int i = 2; i >= 0; --i) out.push_back(char(((n >> (6 * i)) & 63) + kBias));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int i = 5; i >= 0; --i) out.push_back(char(((n >> (6 * i)) & 63) + kBias));
    }
    int acc = 0, nb = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(char(acc + kBias));
                acc = nb = 0;
            }
        }
    if (nb > 0) out.push_back(char((acc << (6 - nb)) + kBias));
    return out;
}

Graph parse_json_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw parse_error("JSON graph needs integer field \"n\"");
    Graph g(j["n"].get<int>());
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw parse_error("edge must be a pair");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
    }
    if (j.contains("distinguished") && !j["distinguished"].is_null())
        g.set_distinguished(j["distinguished"].get<int>());
    return g;
}

std::string emit_json_graph(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (g.distinguished) j["distinguished"] = *g.distinguished;
    return j.dump();
}

}  // namespace cohwl

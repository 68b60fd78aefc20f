#include "cohwl/coherent.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace cohwl {

void PairColoring::canonicalize() {
    std::vector<int> remap(k, -1);
    int next = 0;
    for (int& c : color) {
        if (remap[c] < 0) remap[c] = next++;
        c = remap[c];
    }
    k = next;
}

int Equivalence::class_count() const {
    int m = 0;
    for (int c : cls) m = std::max(m, c + 1);
    return m;
}

std::vector<VertexSet> Equivalence::classes() const {
    std::vector<VertexSet> out(class_count());
    for (Vertex u = 0; u < n; ++u) out[cls[u]].push_back(u);
    return out;
}

Equivalence Equivalence::from_classes(int n, const std::vector<VertexSet>& classes) {
    Equivalence e;
    e.n = n;
    e.cls.assign(n, -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex u : classes[i]) e.cls[u] = int(i);
    if (std::find(e.cls.begin(), e.cls.end(), -1) != e.cls.end())
        throw graph_error("classes do not cover the domain");
    // renumber by first occurrence
    std::vector<int> remap(classes.size(), -1);
    int next = 0;
    for (int& c : e.cls) {
        if (remap[c] < 0) remap[c] = next++;
        c = remap[c];
    }
    return e;
}

std::optional<Equivalence> Equivalence::from_pairs(int n, const PairSet& pairs) {
    std::vector<char> mat(std::size_t(n) * n, 0);
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n) return std::nullopt;
        mat[std::size_t(u) * n + v] = 1;
    }
    for (Vertex u = 0; u < n; ++u)
        if (!mat[std::size_t(u) * n + u]) return std::nullopt;  // not reflexive
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (mat[std::size_t(u) * n + v] != mat[std::size_t(v) * n + u]) return std::nullopt;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (mat[std::size_t(u) * n + v])
                for (Vertex w = 0; w < n; ++w)
                    if (mat[std::size_t(v) * n + w] && !mat[std::size_t(u) * n + w])
                        return std::nullopt;  // not transitive
    Equivalence e;
    e.n = n;
    e.cls.assign(n, -1);
    int next = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (e.cls[u] >= 0) continue;
        e.cls[u] = next;
        for (Vertex v = u + 1; v < n; ++v)
            if (mat[std::size_t(u) * n + v]) e.cls[v] = next;
        ++next;
    }
    return e;
}

PairSet Equivalence::pairs() const {
    PairSet out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (cls[u] == cls[v]) out.emplace_back(u, v);
    return out;
}

bool EquivalenceOnFiber::same(Vertex u, Vertex v) const {
    for (const auto& c : classes) {
        bool hu = std::binary_search(c.begin(), c.end(), u);
        bool hv = std::binary_search(c.begin(), c.end(), v);
        if (hu || hv) return hu && hv;
    }
    return false;
}

bool EquivalenceOnFiber::subset_of(const EquivalenceOnFiber& other) const {
    for (const auto& c : classes) {
        for (std::size_t i = 1; i < c.size(); ++i)
            if (!other.same(c[0], c[i])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Closure by pair-coloring stabilization.

namespace {

// Initial color key of the pair (u,v): diagonal flag, membership of (u,v) and
// of (v,u) per input relation, individualization indices of u and v.
std::vector<int> initial_coloring(int n, const std::vector<PairSet>& relations,
                                  const VertexSet& individualized, int& k_out) {
    const std::size_t nn = std::size_t(n) * n;
    std::vector<std::uint64_t> member(relations.size() * nn, 0);
    for (std::size_t r = 0; r < relations.size(); ++r)
        for (auto [u, v] : relations[r]) {
            if (u < 0 || u >= n || v < 0 || v >= n) throw graph_error("relation pair out of range");
            member[r * nn + std::size_t(u) * n + v] = 1;
        }
    std::vector<int> indiv_index(n, 0);
    int idx = 1;
    for (Vertex a : individualized) {
        if (a < 0 || a >= n) throw graph_error("individualized vertex out of range");
        indiv_index[a] = idx++;
    }
    std::vector<int> color(nn);
    std::map<std::vector<std::int64_t>, int> ids;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::int64_t> key{u == v, indiv_index[u], indiv_index[v]};
            for (std::size_t r = 0; r < relations.size(); ++r) {
                key.push_back(std::int64_t(member[r * nn + std::size_t(u) * n + v]));
                key.push_back(std::int64_t(member[r * nn + std::size_t(v) * n + u]));
            }
            auto [it, fresh] = ids.emplace(std::move(key), int(ids.size()));
            color[std::size_t(u) * n + v] = it->second;
        }
    k_out = int(ids.size());
    return color;
}

struct SigKey {
    const std::int64_t* data;  // old color followed by n sorted entries
    int len;
};

struct SigHash {
    std::size_t operator()(const SigKey& s) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < s.len; ++i) {
            h ^= std::uint64_t(s.data[i]);
            h *= 1099511628211ull;
        }
        return std::size_t(h);
    }
};

struct SigEq {
    bool operator()(const SigKey& a, const SigKey& b) const {
        return a.len == b.len && std::memcmp(a.data, b.data, a.len * sizeof(std::int64_t)) == 0;
    }
};

// One refinement round: signature of (u,v) is (old color, sorted multiset over
// w of (color(u,w), color(w,v))). Signatures are computed in parallel; the
// canonical renumbering scan is sequential, so the result does not depend on
// the schedule.
int refine_round_parallel(int n, int k, std::vector<int>& color) {
    const std::size_t nn = std::size_t(n) * n;
    const int len = n + 1;
    std::vector<std::int64_t> sig(nn * len);
#pragma omp parallel for schedule(static)
    for (long long p = 0; p < (long long)nn; ++p) {
        const Vertex u = Vertex(p / n), v = Vertex(p % n);
        std::int64_t* s = sig.data() + p * len;
        s[0] = color[p];
        for (Vertex w = 0; w < n; ++w)
            s[1 + w] = std::int64_t(color[std::size_t(u) * n + w]) * k + color[std::size_t(w) * n + v];
        std::sort(s + 1, s + len);
    }
    std::unordered_map<SigKey, int, SigHash, SigEq> ids;
    ids.reserve(2 * nn);
    std::vector<int> fresh(nn);
    for (std::size_t p = 0; p < nn; ++p) {
        SigKey key{sig.data() + p * len, len};
        auto [it, inserted] = ids.emplace(key, int(ids.size()));
        fresh[p] = it->second;
    }
    color = std::move(fresh);
    return int(ids.size());
}

int refine_round_reference(int n, int k, std::vector<int>& color) {
    const std::size_t nn = std::size_t(n) * n;
    std::vector<int> fresh(nn);
    std::map<std::vector<std::int64_t>, int> ids;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::int64_t> key;
            key.push_back(color[std::size_t(u) * n + v]);
            for (Vertex w = 0; w < n; ++w)
                key.push_back(std::int64_t(color[std::size_t(u) * n + w]) * k +
                              color[std::size_t(w) * n + v]);
            std::sort(key.begin() + 1, key.end());
            auto [it, inserted] = ids.emplace(std::move(key), int(ids.size()));
            fresh[std::size_t(u) * n + v] = it->second;
        }
    color = std::move(fresh);
    return int(ids.size());
}

PairColoring stabilize(int n, const std::vector<PairSet>& relations, const VertexSet& individualized,
                       bool parallel) {
    PairColoring pc;
    pc.n = n;
    pc.color = initial_coloring(n, relations, individualized, pc.k);
    while (true) {
        int next = parallel ? refine_round_parallel(n, pc.k, pc.color)
                            : refine_round_reference(n, pc.k, pc.color);
        if (next == pc.k) break;
        pc.k = next;
    }
    pc.canonicalize();
    return pc;
}

}  // namespace

CoherentConfiguration::CoherentConfiguration(PairColoring c) : coloring(std::move(c)) {
    const int n = coloring.n;
    const int k = coloring.k;
    rep.assign(k, {-1, -1});
    sizes.assign(k, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            int t = coloring.at(u, v);
            if (rep[t].first < 0) rep[t] = {u, v};
            ++sizes[t];
        }
    converse.resize(k);
    diagonal.resize(k);
    for (int t = 0; t < k; ++t) {
        converse[t] = coloring.at(rep[t].second, rep[t].first);
        diagonal[t] = rep[t].first == rep[t].second;
    }
    // fibers: group vertices by diagonal color, ordered by first vertex
    fiber_of.assign(n, -1);
    std::vector<int> fiber_of_color(k, -1);
    for (Vertex u = 0; u < n; ++u) {
        int dc = coloring.at(u, u);
        if (fiber_of_color[dc] < 0) {
            fiber_of_color[dc] = int(fibers.size());
            fibers.emplace_back();
        }
        fiber_of[u] = fiber_of_color[dc];
        fibers[fiber_of[u]].push_back(u);
    }
    source.resize(k);
    target.resize(k);
    for (int t = 0; t < k; ++t) {
        source[t] = fiber_of[rep[t].first];
        target[t] = fiber_of[rep[t].second];
    }
    profiles.resize(k);
    for (int t = 0; t < k; ++t) {
        auto [u, v] = rep[t];
        std::vector<std::int64_t> keys(n);
        for (Vertex w = 0; w < n; ++w)
            keys[w] = std::int64_t(coloring.at(u, w)) * k + coloring.at(w, v);
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size();) {
            std::size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            profiles[t].emplace_back(keys[i], int(j - i));
            i = j;
        }
    }
}

int CoherentConfiguration::intersection_number(int r, int s, int t) const {
    std::int64_t key = std::int64_t(r) * num_colors() + s;
    const auto& prof = profiles[t];
    auto it = std::lower_bound(prof.begin(), prof.end(), key,
                               [](const auto& e, std::int64_t v) { return e.first < v; });
    return (it != prof.end() && it->first == key) ? it->second : 0;
}

int CoherentConfiguration::class_size(int t) const { return sizes[t]; }

CoherentConfiguration wl_closure(int n, const std::vector<PairSet>& relations,
                                 const VertexSet& individualized) {
    return CoherentConfiguration(stabilize(n, relations, individualized, true));
}

CoherentConfiguration wl_closure_reference(int n, const std::vector<PairSet>& relations,
                                           const VertexSet& individualized) {
    return CoherentConfiguration(stabilize(n, relations, individualized, false));
}

CoherentConfiguration closure_of(const Graph& g, std::optional<Vertex> alpha) {
    VertexSet indiv;
    if (alpha)
        indiv.push_back(*alpha);
    else if (g.distinguished)
        indiv.push_back(*g.distinguished);
    return wl_closure(g.n(), {g.arcs()}, indiv);
}

AxiomReport verify_axioms(const CoherentConfiguration& c) {
    const int n = c.n();
    const int k = c.num_colors();
    std::ostringstream w;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            int t = c.coloring.at(u, v);
            if (bool(c.diagonal[t]) != (u == v)) {
                w << "color " << t << " mixes diagonal and off-diagonal pairs at (" << u << "," << v << ")";
                return {false, "C1", w.str()};
            }
        }
    for (int t = 0; t < k; ++t)
        if (c.converse[c.converse[t]] != t) {
            w << "converse is not an involution at color " << t;
            return {false, "C2", w.str()};
        }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (c.coloring.at(v, u) != c.converse[c.coloring.at(u, v)]) {
                w << "color(" << v << "," << u << ") != converse of color(" << u << "," << v << ")";
                return {false, "C2", w.str()};
            }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            int t = c.coloring.at(u, v);
            std::vector<std::int64_t> keys(n);
            for (Vertex x = 0; x < n; ++x)
                keys[x] = std::int64_t(c.coloring.at(u, x)) * k + c.coloring.at(x, v);
            std::sort(keys.begin(), keys.end());
            std::vector<std::pair<std::int64_t, int>> prof;
            for (std::size_t i = 0; i < keys.size();) {
                std::size_t j = i;
                while (j < keys.size() && keys[j] == keys[i]) ++j;
                prof.emplace_back(keys[i], int(j - i));
                i = j;
            }
            if (prof != c.profiles[t]) {
                // locate one differing (r,s) for the witness
                std::int64_t bad = -1;
                int c1 = 0, c2 = 0;
                for (const auto& [key, cnt] : prof) {
                    auto it = std::lower_bound(c.profiles[t].begin(), c.profiles[t].end(), key,
                                               [](const auto& e, std::int64_t x) { return e.first < x; });
                    int other = (it != c.profiles[t].end() && it->first == key) ? it->second : 0;
                    if (other != cnt) {
                        bad = key;
                        c1 = cnt;
                        c2 = other;
                        break;
                    }
                }
                if (bad < 0)
                    for (const auto& [key, cnt] : c.profiles[t]) {
                        bool found = std::binary_search(
                            prof.begin(), prof.end(), std::make_pair(key, 0),
                            [](const auto& a, const auto& b) { return a.first < b.first; });
                        if (!found) {
                            bad = key;
                            c1 = 0;
                            c2 = cnt;
                            break;
                        }
                    }
                w << "c_rs^t not constant: r=" << bad / k << " s=" << bad % k << " t=" << t
                  << " at (" << u << "," << v << ") count " << c1 << " vs representative ("
                  << c.rep[t].first << "," << c.rep[t].second << ") count " << c2;
                return {false, "C3", w.str()};
            }
        }
    return {true, "", ""};
}

CoherentConfiguration restriction(const CoherentConfiguration& c, const VertexSet& delta) {
    std::vector<char> in(c.n(), 0);
    for (Vertex v : delta) {
        if (v < 0 || v >= c.n()) throw graph_error("vertex out of range");
        in[v] = 1;
    }
    for (const auto& fiber : c.fibers) {
        int count = 0;
        for (Vertex v : fiber) count += in[v];
        if (count != 0 && count != int(fiber.size()))
            throw graph_error("restriction domain is not a union of fibers");
    }
    VertexSet dom = delta;
    std::sort(dom.begin(), dom.end());
    PairColoring pc;
    pc.n = int(dom.size());
    pc.k = c.num_colors();
    pc.color.resize(std::size_t(pc.n) * pc.n);
    for (int i = 0; i < pc.n; ++i)
        for (int j = 0; j < pc.n; ++j)
            pc.color[std::size_t(i) * pc.n + j] = c.coloring.at(dom[i], dom[j]);
    pc.canonicalize();
    return CoherentConfiguration(std::move(pc));
}

bool is_parabolic(const CoherentConfiguration& c, const Equivalence& e) {
    if (e.n != c.n()) return false;
    for (int t = 0; t < c.num_colors(); ++t) {
        bool at_rep = e.same(c.rep[t].first, c.rep[t].second);
        for (Vertex u = 0; u < c.n(); ++u)
            for (Vertex v = 0; v < c.n(); ++v)
                if (c.coloring.at(u, v) == t && e.same(u, v) != at_rep) return false;
    }
    return true;
}

bool is_parabolic(const CoherentConfiguration& c, const PairSet& e) {
    auto eq = Equivalence::from_pairs(c.n(), e);
    if (!eq) return false;
    // e must equal the full equivalence generated by its pairs
    std::vector<char> mat(std::size_t(c.n()) * c.n(), 0);
    for (auto [u, v] : e) mat[std::size_t(u) * c.n() + v] = 1;
    for (Vertex u = 0; u < c.n(); ++u)
        for (Vertex v = 0; v < c.n(); ++v)
            if (bool(mat[std::size_t(u) * c.n() + v]) != eq->same(u, v)) return false;
    return is_parabolic(c, *eq);
}

CoherentConfiguration quotient(const CoherentConfiguration& c, const Equivalence& e) {
    if (!is_parabolic(c, e)) throw graph_error("quotient requires a parabolic");
    auto classes = e.classes();
    const int m = int(classes.size());
    // group colors by the set of class pairs they meet
    std::map<std::vector<std::pair<int, int>>, int> groups;
    std::vector<int> group_of(c.num_colors());
    for (int t = 0; t < c.num_colors(); ++t) {
        std::vector<std::pair<int, int>> meets;
        for (Vertex u = 0; u < c.n(); ++u)
            for (Vertex v = 0; v < c.n(); ++v)
                if (c.coloring.at(u, v) == t) meets.emplace_back(e.cls[u], e.cls[v]);
        std::sort(meets.begin(), meets.end());
        meets.erase(std::unique(meets.begin(), meets.end()), meets.end());
        auto [it, fresh] = groups.emplace(std::move(meets), int(groups.size()));
        group_of[t] = it->second;
    }
    PairColoring pc;
    pc.n = m;
    pc.k = int(groups.size());
    pc.color.resize(std::size_t(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            pc.color[std::size_t(a) * m + b] = group_of[c.coloring.at(classes[a][0], classes[b][0])];
    pc.canonicalize();
    return CoherentConfiguration(std::move(pc));
}

Equivalence graph_twins(const Graph& g) {
    const int n = g.n();
    const int words = g.row_words();
    auto twins = [&](Vertex u, Vertex v) {
        for (int w = 0; w < words; ++w) {
            std::uint64_t diff = g.row(u)[w] ^ g.row(v)[w];
            if (u / 64 == w) diff &= ~(std::uint64_t(1) << (u % 64));
            if (v / 64 == w) diff &= ~(std::uint64_t(1) << (v % 64));
            if (diff) return false;
        }
        return true;
    };
    Equivalence e;
    e.n = n;
    e.cls.assign(n, -1);
    int next = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (e.cls[u] >= 0) continue;
        e.cls[u] = next;
        for (Vertex v = u + 1; v < n; ++v)
            if (e.cls[v] < 0 && twins(u, v)) e.cls[v] = next;
        ++next;
    }
    // transitivity is not automatic when adjacent and non-adjacent twin pairs mix
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((e.cls[u] == e.cls[v]) != twins(u, v))
                throw graph_error("graph twin relation is not transitive on this input");
    return e;
}

Equivalence twin_parabolic(const CoherentConfiguration& c) {
    const int n = c.n();
    auto twins = [&](Vertex u, Vertex v) {
        if (c.fiber_of[u] != c.fiber_of[v]) return false;
        for (Vertex w = 0; w < n; ++w)
            if (w != u && w != v && c.coloring.at(u, w) != c.coloring.at(v, w)) return false;
        return true;
    };
    Equivalence e;
    e.n = n;
    e.cls.assign(n, -1);
    int next = 0;
    for (Vertex u = 0; u < n; ++u) {
        if (e.cls[u] >= 0) continue;
        e.cls[u] = next;
        for (Vertex v = u + 1; v < n; ++v)
            if (e.cls[v] < 0 && twins(u, v)) e.cls[v] = next;
        ++next;
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((e.cls[u] == e.cls[v]) != twins(u, v))
                throw graph_error("configuration twin relation is not transitive");
    if (!is_parabolic(c, e)) throw graph_error("twin relation is not a parabolic");
    return e;
}

EquivalenceOnFiber bipartite_twin_classes(const Graph& g, const VertexSet& delta,
                                          const VertexSet& gamma) {
    for (Vertex v : delta)
        if (std::binary_search(gamma.begin(), gamma.end(), v))
            throw graph_error("bipartite_twin_classes requires disjoint parts");
    EquivalenceOnFiber out;
    out.fiber = delta;
    std::map<std::vector<Vertex>, int> traces;
    for (Vertex u : delta) {
        std::vector<Vertex> trace;
        for (Vertex w : gamma)
            if (g.adjacent(u, w)) trace.push_back(w);
        auto [it, fresh] = traces.emplace(std::move(trace), int(out.classes.size()));
        if (fresh) out.classes.emplace_back();
        out.classes[it->second].push_back(u);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Algebraic isomorphisms.

namespace {

struct ColorSig {
    bool diag;
    int size, src_size, tgt_size;
    std::vector<int> counts;  // sorted multiset of nonzero c_rs^t over (r,s)
    auto operator<=>(const ColorSig&) const = default;
};

ColorSig color_sig(const CoherentConfiguration& c, int t) {
    ColorSig s;
    s.diag = c.diagonal[t];
    s.size = c.class_size(t);
    s.src_size = int(c.fibers[c.source[t]].size());
    s.tgt_size = int(c.fibers[c.target[t]].size());
    for (const auto& [key, cnt] : c.profiles[t]) s.counts.push_back(cnt);
    std::sort(s.counts.begin(), s.counts.end());
    return s;
}

struct IsoSearch {
    const CoherentConfiguration& c;
    const CoherentConfiguration& d;
    int k;
    std::vector<std::vector<int>> candidates;  // per c-color
    std::vector<int> order;
    std::vector<int> phi, inv;           // partial color maps, -1 = unset
    std::vector<int> fiber_map, fiber_inv;
    std::vector<AlgebraicIso> found;

    IsoSearch(const CoherentConfiguration& c_, const CoherentConfiguration& d_) : c(c_), d(d_) {
        k = c.num_colors();
        phi.assign(k, -1);
        inv.assign(k, -1);
        fiber_map.assign(c.fibers.size(), -1);
        fiber_inv.assign(d.fibers.size(), -1);
    }

    bool full_check() const {
        for (int t = 0; t < k; ++t) {
            if (int(c.profiles[t].size()) != int(d.profiles[phi[t]].size())) return false;
            for (const auto& [key, cnt] : c.profiles[t]) {
                int r = int(key / k), s = int(key % k);
                if (d.intersection_number(phi[r], phi[s], phi[t]) != cnt) return false;
            }
        }
        return true;
    }

    // check intersection numbers over triples made fully assigned by color a
    bool consistent_after(int a) const {
        for (int t = 0; t < k; ++t) {
            if (phi[t] < 0) continue;
            for (const auto& [key, cnt] : c.profiles[t]) {
                int r = int(key / k), s = int(key % k);
                if (r != a && s != a && t != a) continue;
                if (phi[r] < 0 || phi[s] < 0) continue;
                if (d.intersection_number(phi[r], phi[s], phi[t]) != cnt) return false;
            }
            for (const auto& [key, cnt] : d.profiles[phi[t]]) {
                int r = int(key / k), s = int(key % k);
                if (inv[r] < 0 || inv[s] < 0) continue;
                if (inv[r] != a && inv[s] != a && t != a) continue;
                if (c.intersection_number(inv[r], inv[s], t) != cnt) return false;
            }
        }
        return true;
    }

    bool assign(int a, int b, std::vector<std::pair<int, int>>& undo_fibers) {
        phi[a] = b;
        inv[b] = a;
        auto bind_fiber = [&](int fa, int fb) {
            if (fiber_map[fa] < 0 && fiber_inv[fb] < 0) {
                fiber_map[fa] = fb;
                fiber_inv[fb] = fa;
                undo_fibers.emplace_back(fa, fb);
                return true;
            }
            return fiber_map[fa] == fb;
        };
        return bind_fiber(c.source[a], d.source[b]) && bind_fiber(c.target[a], d.target[b]);
    }

    void search(std::size_t pos) {
        while (pos < order.size() && phi[order[pos]] >= 0) ++pos;
        if (pos == order.size()) {
            if (full_check()) found.push_back({phi});
            return;
        }
        int a = order[pos];
        int astar = c.converse[a];
        for (int b : candidates[a]) {
            if (inv[b] >= 0) continue;
            int bstar = d.converse[b];
            bool paired = astar != a;
            if (paired && (phi[astar] >= 0 || inv[bstar] >= 0)) continue;
            if (!paired && bstar != b) continue;
            std::vector<std::pair<int, int>> undo_fibers;
            bool ok = assign(a, b, undo_fibers);
            if (ok && paired) ok = assign(astar, bstar, undo_fibers);
            if (ok) ok = consistent_after(a) && (!paired || consistent_after(astar));
            if (ok) search(pos + 1);
            phi[a] = -1;
            inv[b] = -1;
            if (paired) {
                phi[astar] = -1;
                inv[bstar] = -1;
            }
            for (auto [fa, fb] : undo_fibers) {
                fiber_map[fa] = -1;
                fiber_inv[fb] = -1;
            }
        }
    }
};

}  // namespace

std::vector<AlgebraicIso> algebraic_isomorphisms(const CoherentConfiguration& c,
                                                 const CoherentConfiguration& d, int color_cap) {
    if (c.num_colors() > color_cap || d.num_colors() > color_cap)
        throw graph_error("algebraic isomorphism color cap exceeded");
    if (c.num_colors() != d.num_colors() || c.n() != d.n()) return {};
    IsoSearch search(c, d);
    const int k = c.num_colors();
    std::vector<ColorSig> dsig(k);
    for (int t = 0; t < k; ++t) dsig[t] = color_sig(d, t);
    search.candidates.resize(k);
    for (int t = 0; t < k; ++t) {
        ColorSig cs = color_sig(c, t);
        for (int u = 0; u < k; ++u)
            if (cs == dsig[u]) search.candidates[t].push_back(u);
        if (search.candidates[t].empty()) return {};
    }
    search.order.resize(k);
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return search.candidates[a].size() < search.candidates[b].size();
    });
    search.search(0);
    return search.found;
}

std::optional<std::vector<Vertex>> induced_by_combinatorial(const CoherentConfiguration& c,
                                                            const CoherentConfiguration& d,
                                                            const AlgebraicIso& phi) {
    const int n = c.n();
    if (d.n() != n) return std::nullopt;
    std::vector<std::vector<Vertex>> cand(n);
    for (Vertex u = 0; u < n; ++u) {
        int want = phi.map[c.coloring.at(u, u)];
        for (Vertex x = 0; x < n; ++x)
            if (d.coloring.at(x, x) == want) cand[u].push_back(x);
        if (cand[u].empty()) return std::nullopt;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return cand[a].size() < cand[b].size(); });
    std::vector<Vertex> f(n, -1);
    std::vector<char> used(n, 0);
    std::vector<int> placed;
    std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
        if (pos == order.size()) return true;
        Vertex u = order[pos];
        for (Vertex x : cand[u]) {
            if (used[x]) continue;
            bool ok = true;
            for (Vertex v : placed) {
                if (d.coloring.at(x, f[v]) != phi.map[c.coloring.at(u, v)] ||
                    d.coloring.at(f[v], x) != phi.map[c.coloring.at(v, u)]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            f[u] = x;
            used[x] = 1;
            placed.push_back(u);
            if (go(pos + 1)) return true;
            placed.pop_back();
            used[x] = 0;
            f[u] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return f;
}

std::string dump_configuration(const CoherentConfiguration& c) {
    nlohmann::ordered_json j;
    j["n"] = c.n();
    j["colors"] = c.num_colors();
    j["matrix"] = c.coloring.color;
    j["converse"] = c.converse;
    nlohmann::ordered_json diag = nlohmann::ordered_json::array();
    for (int t = 0; t < c.num_colors(); ++t)
        if (c.diagonal[t]) diag.push_back(t);
    j["diagonal"] = diag;
    j["fibers"] = c.fibers;
    return j.dump();
}

}  // namespace cohwl

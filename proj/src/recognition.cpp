#include "cdgraph/recognition.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

namespace cdgraph {

std::vector<Graph> chorded_c6_family() {
    // Cycle 0-1-2-3-4-5 with partite sides {0,2,4} and {1,3,5}; chords go
    // inside {1,3,5}, consecutive chords sharing vertex 3.
    std::vector<std::pair<int, int>> cycle = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
    std::vector<std::pair<int, int>> chords = {{1, 3}, {3, 5}, {1, 5}};
    std::vector<Graph> fam;
    for (int k = 0; k <= 3; ++k) {
        auto edges = cycle;
        edges.insert(edges.end(), chords.begin(), chords.begin() + k);
        fam.push_back(Graph::from_edges(6, edges));
    }
    return fam;
}

namespace {

// Connector candidates for an independent triple: cand[i] holds the vertices
// adjacent to both other x's and non-adjacent to x_i.
bool connector_sets(const Graph& g, int x1, int x2, int x3, std::array<Bitset, 3>& cand) {
    const int xs[3] = {x1, x2, x3};
    for (int i = 0; i < 3; ++i) {
        Bitset c = g.row(xs[(i + 1) % 3]);
        c &= g.row(xs[(i + 2) % 3]);
        c.andnot(g.row(xs[i]));
        c.reset(xs[i]);
        if (c.none()) return false;
        cand[i] = std::move(c);
    }
    return true;
}

template <typename Select>
std::optional<ChordedC6Witness> scan_triples(const Graph& g, Select&& select) {
    int n = g.vertex_count();
    std::array<Bitset, 3> cand;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                if (!connector_sets(g, a, b, c, cand)) continue;
                if (auto w = select(a, b, c, cand)) return w;
            }
        }
    return std::nullopt;
}

} // namespace

std::optional<ChordedC6Witness> find_chorded_c6(const Graph& g) {
    return scan_triples(g, [&](int a, int b, int c, const std::array<Bitset, 3>& cand)
                               -> std::optional<ChordedC6Witness> {
        int v1 = cand[0].first(), v2 = cand[1].first(), v3 = cand[2].first();
        int chords = int(g.has_edge(v1, v2)) + int(g.has_edge(v2, v3)) + int(g.has_edge(v1, v3));
        return ChordedC6Witness{chords, {a, b, c, v1, v2, v3}};
    });
}

std::optional<ChordedC6Witness> find_induced_c6(const Graph& g) {
    return scan_triples(g, [&](int a, int b, int c, const std::array<Bitset, 3>& cand)
                               -> std::optional<ChordedC6Witness> {
        std::optional<ChordedC6Witness> found;
        cand[0].for_each([&](int v1) {
            if (found) return;
            Bitset c2 = cand[1];
            c2.andnot(g.row(v1));
            c2.for_each([&](int v2) {
                if (found) return;
                Bitset c3 = cand[2];
                c3.andnot(g.row(v1));
                c3.andnot(g.row(v2));
                if (int v3 = c3.first(); v3 >= 0)
                    found = ChordedC6Witness{0, {a, b, c, v1, v2, v3}};
            });
        });
        return found;
    });
}

bool is_valid_peo(const Graph& g, const Peo& peo) {
    int n = g.vertex_count();
    if (int(peo.order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = peo.order[size_t(i)];
        if (v < 0 || v >= n || pos[v] >= 0) return false;
        pos[v] = i;
    }
    // It suffices to check each vertex against its earliest later neighbor.
    for (int i = 0; i < n; ++i) {
        int v = peo.order[size_t(i)];
        int u = -1, upos = n;
        for (int w : g.neighbors(v))
            if (pos[w] > i && pos[w] < upos) {
                upos = pos[w];
                u = w;
            }
        if (u < 0) continue;
        for (int w : g.neighbors(v))
            if (pos[w] > upos && !g.has_edge(u, w)) return false;
    }
    return true;
}

std::optional<Peo> is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(n, 0), visit;
    std::vector<bool> seen(n, false);
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!seen[v] && (best < 0 || weight[v] > weight[best])) best = v;
        seen[best] = true;
        visit.push_back(best);
        for (int w : g.neighbors(best))
            if (!seen[w]) ++weight[w];
    }
    Peo peo;
    peo.order.assign(visit.rbegin(), visit.rend());
    if (!is_valid_peo(g, peo)) return std::nullopt;
    return peo;
}

namespace {

std::vector<int> odd_cycle_witness(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push(w);
                } else if (color[w] == color[u]) {
                    std::vector<int> pu = {u}, pw = {w};
                    int a = u, b = w;
                    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) pw.push_back(b = parent[b]);
                    while (a != b) {
                        pu.push_back(a = parent[a]);
                        pw.push_back(b = parent[b]);
                    }
                    pu.pop_back();
                    std::vector<int> cyc(pu);
                    cyc.insert(cyc.end(), pw.rbegin(), pw.rend());
                    return cyc;
                }
            }
        }
    }
    return {};
}

// Induced cycle of length >= 6 via canonical-start induced-path DFS: the
// start vertex is the smallest on the cycle, the second is smaller than the
// last. Exponential worst case.
struct LongCycleSearch {
    const Graph& g;
    std::vector<int> path;
    Bitset forbidden; // path interior + neighbors of interior
    std::vector<int> result;

    explicit LongCycleSearch(const Graph& gg) : g(gg), forbidden(gg.vertex_count()) {}

    bool extend() {
        int s = path[0];
        int last = path.back();
        for (int w : g.neighbors(last)) {
            if (w <= s || forbidden.test(w)) continue;
            if (g.has_edge(w, s)) {
                if (path.size() >= 5) {
                    result = path;
                    result.push_back(w);
                    return true;
                }
                continue; // neighbor of s can only close a cycle
            }
            Bitset saved = forbidden;
            forbidden.set(w);
            forbidden |= g.row(last); // last becomes interior, its row is now a chord
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            forbidden = std::move(saved);
        }
        return false;
    }

    std::vector<int> run() {
        int n = g.vertex_count();
        for (int s = 0; s < n; ++s)
            for (int a : g.neighbors(s)) {
                if (a <= s) continue;
                path = {s, a};
                forbidden = Bitset(n);
                forbidden.set(s);
                forbidden.set(a);
                if (extend()) return result;
            }
        return {};
    }
};

} // namespace

ChordalBipartiteReport is_chordal_bipartite(const Graph& g) {
    ChordalBipartiteReport rep;
    rep.bipartition = bipartition_of(g);
    if (!rep.bipartition) {
        rep.ok = false;
        rep.witness_cycle = odd_cycle_witness(g);
        return rep;
    }
    LongCycleSearch search(g);
    rep.witness_cycle = search.run();
    rep.ok = rep.witness_cycle.empty();
    return rep;
}

bool is_diamond_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        Bitset common = g.row(u);
        common &= g.row(v);
        bool clique = true;
        common.for_each([&](int x) {
            if (!clique) return;
            Bitset rest = common;
            rest.reset(x);
            if (!rest.subset_of(g.row(x))) clique = false;
        });
        if (!clique) return false;
    }
    return true;
}

std::vector<std::vector<int>> list_maximal_cliques_diamond_free(const Graph& g) {
    if (!is_diamond_free(g))
        throw precondition_error("list_maximal_cliques_diamond_free: graph has a diamond");
    std::set<std::vector<int>> cliques;
    for (auto [u, v] : g.edges()) {
        Bitset k = g.row(u);
        k &= g.row(v);
        k.set(u);
        k.set(v);
        cliques.insert(k.to_vector());
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) cliques.insert({v});
    return {cliques.begin(), cliques.end()};
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> is_co_bipartite(const Graph& g) {
    auto bip = bipartition_of(complement(g));
    if (!bip) return std::nullopt;
    return std::make_pair(bip->side_a, bip->side_b);
}

IntervalRep parse_interval_rep(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::optional<std::pair<long, long>>> slots;
    std::string line;
    while (std::getline(in, line)) {
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long id, l, r;
        if (!(ls >> id)) continue;
        if (!(ls >> l >> r)) throw parse_error("interval line needs \"id left right\": " + line);
        long trail;
        if (ls >> trail) throw parse_error("trailing token on interval line: " + line);
        if (id < 0) throw parse_error("negative vertex id");
        if (l >= r) throw parse_error("degenerate interval for vertex " + std::to_string(id));
        if (size_t(id) >= slots.size()) slots.resize(size_t(id) + 1);
        if (slots[size_t(id)]) throw parse_error("duplicate vertex id " + std::to_string(id));
        slots[size_t(id)] = std::make_pair(l, r);
    }
    IntervalRep rep;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) throw parse_error("missing interval for vertex " + std::to_string(i));
        rep.intervals.push_back(*slots[i]);
    }
    return rep;
}

std::string serialize_interval_rep(const IntervalRep& rep) {
    std::ostringstream out;
    for (size_t i = 0; i < rep.intervals.size(); ++i)
        out << i << ' ' << rep.intervals[i].first << ' ' << rep.intervals[i].second << '\n';
    return out.str();
}

Graph intersection_graph(const IntervalRep& rep) {
    int n = rep.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto [lu, ru] = rep.intervals[size_t(u)];
            auto [lv, rv] = rep.intervals[size_t(v)];
            if (std::max(lu, lv) <= std::min(ru, rv)) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

std::optional<std::pair<int, int>> validate_interval_rep(const Graph& g, const IntervalRep& rep) {
    if (rep.vertex_count() != g.vertex_count())
        throw precondition_error("interval representation does not cover all vertices");
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto [lu, ru] = rep.intervals[size_t(u)];
            auto [lv, rv] = rep.intervals[size_t(v)];
            bool overlap = std::max(lu, lv) <= std::min(ru, rv);
            if (overlap != g.has_edge(u, v)) return std::make_pair(u, v);
        }
    return std::nullopt;
}

bool is_proper_rep(const IntervalRep& rep) {
    int n = rep.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            auto [lu, ru] = rep.intervals[size_t(u)];
            auto [lv, rv] = rep.intervals[size_t(v)];
            if (lu <= lv && rv <= ru && (lu != lv || rv != ru)) return false;
        }
    return true;
}

} // namespace cdgraph

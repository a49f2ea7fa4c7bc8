#include "cdgraph/poly.hpp"

#include <algorithm>
#include <queue>

namespace cdgraph {

namespace {

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        Bitset common = g.row(u);
        common &= g.row(v);
        if (int w = common.first(); w >= 0) return std::array<int, 3>{u, v, w};
    }
    return std::nullopt;
}

// Blossom-contracting augmenting path search.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(size_t(n_), -1), parent_(size_t(n_), -1),
          base_(size_t(n_)), used_(size_t(n_)), in_blossom_(size_t(n_)) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v)
            if (match_[size_t(v)] < 0)
                for (int u : g_.neighbors(v))
                    if (match_[size_t(u)] < 0) {
                        match_[size_t(v)] = u;
                        match_[size_t(u)] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (match_[size_t(v)] < 0)
                if (int u = find_path(v); u >= 0) augment(u);
        return match_;
    }

private:
    void augment(int v) {
        while (v >= 0) {
            int pv = parent_[size_t(v)];
            int next = match_[size_t(pv)];
            match_[size_t(v)] = pv;
            match_[size_t(pv)] = v;
            v = next;
        }
    }

    int lowest_common_base(int a, int b) {
        std::vector<bool> mark(size_t(n_), false);
        while (true) {
            a = base_[size_t(a)];
            mark[size_t(a)] = true;
            if (match_[size_t(a)] < 0) break;
            a = parent_[size_t(match_[size_t(a)])];
        }
        while (true) {
            b = base_[size_t(b)];
            if (mark[size_t(b)]) return b;
            b = parent_[size_t(match_[size_t(b)])];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base_[size_t(v)] != stem) {
            in_blossom_[size_t(base_[size_t(v)])] = true;
            in_blossom_[size_t(base_[size_t(match_[size_t(v)])])] = true;
            parent_[size_t(v)] = child;
            child = match_[size_t(v)];
            v = parent_[size_t(child)];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[size_t(i)] = i;
        used_[size_t(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[size_t(v)] == base_[size_t(to)] || match_[size_t(v)] == to) continue;
                if (to == root ||
                    (match_[size_t(to)] >= 0 && parent_[size_t(match_[size_t(to)])] >= 0)) {
                    int stem = lowest_common_base(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, stem, to);
                    mark_path(to, stem, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[size_t(base_[size_t(i)])]) {
                            base_[size_t(i)] = stem;
                            if (!used_[size_t(i)]) {
                                used_[size_t(i)] = true;
                                q.push(i);
                            }
                        }
                } else if (parent_[size_t(to)] < 0) {
                    parent_[size_t(to)] = v;
                    if (match_[size_t(to)] < 0) return to;
                    used_[size_t(match_[size_t(to)])] = true;
                    q.push(match_[size_t(to)]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

} // namespace

Matching max_matching_general(const Graph& g) {
    auto mate = BlossomMatcher(g).run();
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[size_t(v)] > v) m.pairs.emplace_back(v, mate[size_t(v)]);
    return m;
}

CliqueCover clique_cover_trianglefree(const Graph& g) {
    if (auto t = find_triangle(g)) throw triangle_error(*t);
    Matching m = max_matching_general(g);
    std::vector<bool> matched(size_t(g.vertex_count()), false);
    CliqueCover cover;
    for (auto [u, v] : m.pairs) {
        matched[size_t(u)] = matched[size_t(v)] = true;
        cover.parts.push_back({u, v});
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!matched[size_t(v)]) cover.parts.push_back({v});
    std::sort(cover.parts.begin(), cover.parts.end());
    return cover;
}

CliqueCover clique_cover_chordal(const Graph& g, const Peo& peo) {
    if (!is_valid_peo(g, peo))
        throw precondition_error("clique_cover_chordal: invalid elimination order");
    int n = g.vertex_count();
    std::vector<int> pos(size_t(n));
    for (int i = 0; i < n; ++i) pos[size_t(peo.order[size_t(i)])] = i;
    std::vector<int> part_of(size_t(n), -1);
    CliqueCover cover;
    cover.witness_independent_set.emplace();
    for (int i = 0; i < n; ++i) {
        int v = peo.order[size_t(i)];
        if (part_of[size_t(v)] >= 0) continue;
        int id = int(cover.parts.size());
        cover.parts.push_back({v});
        cover.witness_independent_set->push_back(v);
        part_of[size_t(v)] = id;
        for (int w : g.neighbors(v))
            if (pos[size_t(w)] > i && part_of[size_t(w)] < 0) {
                part_of[size_t(w)] = id;
                cover.parts[size_t(id)].push_back(w);
            }
    }
    for (auto& p : cover.parts) std::sort(p.begin(), p.end());
    return cover;
}

int dominator_for_class(const Graph& g, const std::vector<int>& cls) {
    if (cls.empty()) throw precondition_error("dominator_for_class: empty class");
    int n = g.vertex_count();
    for (int v : cls)
        if (v < 0 || v >= n) throw precondition_error("dominator_for_class: id out of range");
    for (size_t a = 0; a < cls.size(); ++a)
        for (size_t b = a + 1; b < cls.size(); ++b) {
            if (g.has_edge(cls[a], cls[b]))
                throw precondition_error("dominator_for_class: class not independent");
            if (!g.row(cls[a]).intersects(g.row(cls[b])))
                throw precondition_error("dominator_for_class: members not at distance 2");
        }

    auto common_neighbor = [&](const std::vector<int>& set) -> int {
        Bitset cand = g.row(set[0]);
        for (size_t i = 1; i < set.size(); ++i) cand &= g.row(set[i]);
        return cand.first();
    };
    if (int d = common_neighbor(cls); d >= 0) return d;

    // No dominator: shrink to a minimal undominated subset and rebuild the
    // obstruction from its connectors.
    std::vector<int> work = cls;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (size_t i = 0; i < work.size(); ++i) {
            std::vector<int> sub = work;
            sub.erase(sub.begin() + long(i));
            if (sub.size() >= 2 && common_neighbor(sub) < 0) {
                work = std::move(sub);
                shrunk = true;
                break;
            }
        }
    }
    ChordedC6Witness w;
    std::array<int, 3> vs{};
    for (int i = 0; i < 3; ++i) {
        std::vector<int> sub;
        for (size_t j = 0; j < work.size(); ++j)
            if (j != size_t(i)) sub.push_back(work[j]);
        vs[size_t(i)] = common_neighbor(sub);
    }
    w.vertices = {work[0], work[1], work[2], vs[0], vs[1], vs[2]};
    w.chord_count = int(g.has_edge(vs[0], vs[1])) + int(g.has_edge(vs[1], vs[2])) +
                    int(g.has_edge(vs[0], vs[2]));
    throw obstruction_error(w);
}

namespace {

CdColoring coloring_from_cover(const Graph& g, const std::vector<std::vector<int>>& parts) {
    CdColoring col;
    col.class_of.assign(size_t(g.vertex_count()), -1);
    col.dominator_of.resize(parts.size());
    for (size_t j = 0; j < parts.size(); ++j) {
        for (int v : parts[j]) col.class_of[size_t(v)] = int(j);
        col.dominator_of[j] = dominator_for_class(g, parts[j]);
    }
    if (auto report = verify_cd_coloring(g, col))
        throw error("internal: lifted coloring failed verification: " + *report);
    return col;
}

} // namespace

AuxColoringResult cd_chromatic_via_aux(const Graph& g, int oracle_limit) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw precondition_error("cd_chromatic_via_aux: isolated vertex " + std::to_string(v));
    if (auto w = find_chorded_c6(g)) throw obstruction_error(*w);

    Graph aux = aux_graph(g);
    AuxColoringResult res;
    std::vector<std::vector<int>> parts;
    if (!find_triangle(aux)) {
        parts = clique_cover_trianglefree(aux).parts;
        res.strategy = "matching";
    } else if (auto peo = is_chordal(aux)) {
        parts = clique_cover_chordal(aux, *peo).parts;
        res.strategy = "chordal";
    } else if (aux.vertex_count() <= oracle_limit) {
        parts = min_clique_cover_exact(aux, oracle_limit).second;
        res.strategy = "exact";
    } else {
        throw unsupported_error(
            "cd_chromatic_via_aux: distance-2 graph is neither triangle-free nor chordal "
            "and exceeds the exact cover limit");
    }
    res.value = int(parts.size());
    res.coloring = coloring_from_cover(g, parts);
    return res;
}

ChordalBipartiteSuiteResult chordal_bipartite_suite(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw precondition_error("chordal_bipartite_suite: isolated vertex " +
                                     std::to_string(v));
    if (!is_chordal_bipartite(g).ok)
        throw precondition_error("chordal_bipartite_suite: input is not chordal bipartite");

    Graph aux = aux_graph(g);
    auto peo = is_chordal(aux);
    if (!peo) throw error("internal: distance-2 graph of a chordal bipartite input not chordal");
    CliqueCover cover = clique_cover_chordal(aux, *peo);

    ChordalBipartiteSuiteResult res;
    res.value = cover.size();
    res.coloring = coloring_from_cover(g, cover.parts);

    std::vector<int> doms = res.coloring.dominator_of;
    std::sort(doms.begin(), doms.end());
    doms.erase(std::unique(doms.begin(), doms.end()), doms.end());
    if (int(doms.size()) != res.value)
        throw error("internal: dominator set smaller than the cover, class check fails");
    res.tds.vertices = std::move(doms);
    if (auto uncovered = verify_total_dominating(g, res.tds.vertices))
        throw error("internal: dominator set misses vertex " + std::to_string(*uncovered));

    res.cluster.vertices = *cover.witness_independent_set;
    std::sort(res.cluster.vertices.begin(), res.cluster.vertices.end());
    if (auto bad = verify_separated_cluster(g, res.cluster.vertices))
        throw error("internal: cover witness is not a separated-cluster");
    return res;
}

Graph threek1_aux_fastpath(const Graph& g) {
    int n = g.vertex_count();
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Bitset rest = all;
            rest.andnot(g.row(u));
            rest.andnot(g.row(v));
            rest.reset(u);
            rest.reset(v);
            if (int w = rest.first(); w >= 0)
                throw independent_triple_error({u, v, w});
        }

    if (auto sides = is_co_bipartite(g)) {
        Bitset side_b(n);
        for (int v : sides->second) side_b.set(v);
        std::vector<int> cross_degree(size_t(n), 0);
        for (int v = 0; v < n; ++v)
            cross_degree[size_t(v)] = side_b.test(v)
                                          ? g.degree(v) - g.row(v).intersection_count(side_b)
                                          : g.row(v).intersection_count(side_b);
        std::vector<std::pair<int, int>> edges;
        for (int u : sides->first)
            for (int v : sides->second)
                if (!g.has_edge(u, v) &&
                    (cross_degree[size_t(u)] > 0 || cross_degree[size_t(v)] > 0))
                    edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
    // Not co-bipartite: the square is complete, so distance-2 pairs are
    // exactly the non-edges.
    return complement(g);
}

} // namespace cdgraph

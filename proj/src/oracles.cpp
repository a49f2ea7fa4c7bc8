#include "cdgraph/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace cdgraph {

std::vector<std::vector<int>> CdColoring::classes() const {
    std::vector<std::vector<int>> out(dominator_of.size());
    for (size_t v = 0; v < class_of.size(); ++v) out[size_t(class_of[v])].push_back(int(v));
    return out;
}

namespace {

using mask_t = uint32_t;

void check_limit(const Graph& g, int limit, const char* op) {
    if (g.vertex_count() > limit)
        throw limit_error(std::string(op) + ": vertex count " +
                          std::to_string(g.vertex_count()) + " exceeds limit " +
                          std::to_string(limit));
}

void check_no_isolated(const Graph& g, const char* op) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw precondition_error(std::string(op) + ": isolated vertex " + std::to_string(v));
}

std::vector<mask_t> adjacency_masks(const Graph& g) {
    std::vector<mask_t> adj(size_t(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        adj[size_t(u)] |= mask_t{1} << v;
        adj[size_t(v)] |= mask_t{1} << u;
    }
    return adj;
}

int mis_size(const std::vector<mask_t>& adj, mask_t pool) {
    if (!pool) return 0;
    int best_v = -1, best_d = -1;
    int edges2 = 0;
    for (mask_t p = pool; p;) {
        int v = std::countr_zero(p);
        p &= p - 1;
        int d = std::popcount(adj[size_t(v)] & pool);
        edges2 += d;
        if (d > best_d) {
            best_d = d;
            best_v = v;
        }
    }
    // Max degree <= 1: the pool induces a matching plus isolated vertices.
    if (best_d <= 1) return std::popcount(pool) - edges2 / 2;
    mask_t vbit = mask_t{1} << best_v;
    int without = mis_size(adj, pool & ~vbit);
    int with = 1 + mis_size(adj, pool & ~(adj[size_t(best_v)] | vbit));
    return std::max(with, without);
}

// Lexicographically smallest maximum independent set of the pool.
std::vector<int> mis_lex_witness(const std::vector<mask_t>& adj, int n, int opt) {
    std::vector<int> chosen;
    mask_t pool = n == 32 ? ~mask_t{0} : (mask_t{1} << n) - 1;
    int have = 0;
    for (int v = 0; v < n && have < opt; ++v) {
        if (!(pool >> v & 1)) continue;
        mask_t taken = pool & ~(adj[size_t(v)] | (mask_t{1} << v));
        if (have + 1 + mis_size(adj, taken) == opt) {
            chosen.push_back(v);
            ++have;
            pool = taken;
        } else {
            pool &= ~(mask_t{1} << v);
        }
    }
    return chosen;
}

} // namespace

std::pair<int, std::vector<int>> max_independent_set_exact(const Graph& g, int limit) {
    check_limit(g, std::min(limit, 31), "max_independent_set_exact");
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    mask_t full = n >= 32 ? ~mask_t{0} : (mask_t{1} << n) - 1;
    int opt = mis_size(adj, full);
    return {opt, mis_lex_witness(adj, n, opt)};
}

namespace {

// Min partition of `full` into parts for which part_ok holds; part_ok must be
// closed under taking nonempty subsets. Returns part masks, peeled off the
// lowest uncovered vertex first.
template <typename PartOk>
std::pair<int, std::vector<mask_t>> partition_dp(int n, PartOk&& part_ok) {
    mask_t full = n == 32 ? ~mask_t{0} : (mask_t{1} << n) - 1;
    std::vector<uint8_t> f(size_t(full) + 1, 255);
    f[0] = 0;
    for (mask_t m = 1; m <= full; ++m) {
        int v = std::countr_zero(m);
        mask_t vbit = mask_t{1} << v;
        mask_t rest = m ^ vbit;
        uint8_t best = 255;
        for (mask_t sub = rest;; sub = (sub - 1) & rest) {
            mask_t part = sub | vbit;
            if (part_ok(part) && f[m ^ part] != 255)
                best = std::min<uint8_t>(best, uint8_t(f[m ^ part] + 1));
            if (!sub) break;
        }
        f[m] = best;
    }
    std::vector<mask_t> parts;
    mask_t m = full;
    while (m) {
        int v = std::countr_zero(m);
        mask_t vbit = mask_t{1} << v;
        mask_t rest = m ^ vbit;
        for (mask_t sub = rest;; sub = (sub - 1) & rest) {
            mask_t part = sub | vbit;
            if (part_ok(part) && f[m ^ part] + 1 == f[m]) {
                parts.push_back(part);
                m ^= part;
                break;
            }
            if (!sub) break;
        }
    }
    return {int(parts.size()), std::move(parts)};
}

std::vector<uint8_t> clique_masks(const Graph& g) {
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    std::vector<uint8_t> ok(size_t(1) << n, 0);
    ok[0] = 1;
    for (mask_t m = 1; m < (mask_t{1} << n); ++m) {
        int v = std::countr_zero(m);
        mask_t rest = m ^ (mask_t{1} << v);
        ok[m] = ok[rest] && (rest & ~adj[size_t(v)]) == 0;
    }
    return ok;
}

std::vector<int> mask_to_vertices(mask_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

} // namespace

std::pair<int, std::vector<std::vector<int>>> min_clique_cover_exact(const Graph& g, int limit) {
    check_limit(g, std::min(limit, 24), "min_clique_cover_exact");
    int n = g.vertex_count();
    if (n == 0) return {0, {}};
    auto clique = clique_masks(g);
    auto [k, parts] = partition_dp(n, [&](mask_t s) { return clique[s] != 0; });
    std::vector<std::vector<int>> out;
    out.reserve(parts.size());
    for (mask_t p : parts) out.push_back(mask_to_vertices(p));
    return {k, std::move(out)};
}

std::pair<int, CdColoring> cd_chromatic_exact(const Graph& g, int limit) {
    check_no_isolated(g, "cd_chromatic_exact");
    check_limit(g, std::min(limit, 24), "cd_chromatic_exact");
    int n = g.vertex_count();
    if (n == 0) return {0, CdColoring{}};
    auto adj = adjacency_masks(g);

    // indep[S]: S is an independent set.
    std::vector<uint8_t> indep(size_t(1) << n, 0);
    indep[0] = 1;
    for (mask_t m = 1; m < (mask_t{1} << n); ++m) {
        int v = std::countr_zero(m);
        mask_t rest = m ^ (mask_t{1} << v);
        indep[m] = indep[rest] && (rest & adj[size_t(v)]) == 0;
    }
    // dom[S]: some vertex w has S inside N(w). Superset-OR transform over the
    // neighborhood masks.
    std::vector<uint8_t> dom(size_t(1) << n, 0);
    for (int w = 0; w < n; ++w) dom[adj[size_t(w)]] = 1;
    for (int b = 0; b < n; ++b)
        for (mask_t m = 0; m < (mask_t{1} << n); ++m)
            if (!(m >> b & 1)) dom[m] = dom[m] | dom[m | (mask_t{1} << b)];

    auto [k, parts] =
        partition_dp(n, [&](mask_t s) { return indep[s] && dom[s]; });

    CdColoring col;
    col.class_of.assign(size_t(n), -1);
    col.dominator_of.resize(parts.size());
    for (size_t j = 0; j < parts.size(); ++j) {
        for (int v : mask_to_vertices(parts[j])) col.class_of[size_t(v)] = int(j);
        int d = -1;
        for (int w = 0; w < n && d < 0; ++w)
            if ((parts[j] & ~adj[size_t(w)]) == 0) d = w;
        col.dominator_of[j] = d;
    }
    return {k, std::move(col)};
}

namespace {

constexpr uint8_t kInf8 = 255;

// r[C] = min extra chosen vertices (from `allowed`) so that coverage C grows
// to everything; covering vertex v means choosing some u adjacent to v.
std::vector<uint8_t> tds_table(const std::vector<mask_t>& adj, int n, mask_t allowed) {
    mask_t full = n == 32 ? ~mask_t{0} : (mask_t{1} << n) - 1;
    std::vector<uint8_t> r(size_t(full) + 1, kInf8);
    r[full] = 0;
    for (mask_t c = full - 1;; --c) {
        int v = std::countr_zero(~c);
        mask_t cands = adj[size_t(v)] & allowed;
        uint8_t best = kInf8;
        while (cands) {
            int u = std::countr_zero(cands);
            cands &= cands - 1;
            uint8_t sub = r[c | adj[size_t(u)]];
            if (sub != kInf8) best = std::min<uint8_t>(best, uint8_t(sub + 1));
        }
        r[c] = best;
        if (c == 0) break;
    }
    return r;
}

} // namespace

std::pair<int, TotalDominatingSet> total_domination_exact(const Graph& g, int limit) {
    check_no_isolated(g, "total_domination_exact");
    check_limit(g, std::min(limit, 24), "total_domination_exact");
    int n = g.vertex_count();
    if (n == 0) return {0, TotalDominatingSet{}};
    auto adj = adjacency_masks(g);
    mask_t full = n == 32 ? ~mask_t{0} : (mask_t{1} << n) - 1;
    int opt = tds_table(adj, n, full)[0];

    // Lexicographically smallest optimum: force vertices in ascending order,
    // completing each candidate prefix from strictly larger vertices only.
    TotalDominatingSet s;
    mask_t covered = 0;
    for (int v = 0; v < n && int(s.vertices.size()) < opt; ++v) {
        mask_t above = full & ~((mask_t{2} << v) - 1);
        auto r = tds_table(adj, n, above);
        mask_t c2 = covered | adj[size_t(v)];
        if (r[c2] != kInf8 && int(s.vertices.size()) + 1 + r[c2] == opt) {
            s.vertices.push_back(v);
            covered = c2;
        }
    }
    return {opt, std::move(s)};
}

std::pair<int, SeparatedCluster> separated_cluster_exact(const Graph& g, int limit) {
    auto [k, witness] = max_independent_set_exact(aux_graph(g), limit);
    return {k, SeparatedCluster{std::move(witness)}};
}

std::optional<std::string> verify_cd_coloring(const Graph& g, const CdColoring& c) {
    int n = g.vertex_count();
    int k = c.class_count();
    if (int(c.class_of.size()) != n) return "class_of size does not match vertex count";
    for (int v = 0; v < n; ++v)
        if (c.class_of[size_t(v)] < 0 || c.class_of[size_t(v)] >= k)
            return "vertex " + std::to_string(v) + " has out-of-range class";
    auto cls = c.classes();
    for (int j = 0; j < k; ++j) {
        const auto& members = cls[size_t(j)];
        if (members.empty()) return "class " + std::to_string(j) + " is empty";
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (g.has_edge(members[a], members[b]))
                    return "class " + std::to_string(j) + " not independent: edge " +
                           std::to_string(members[a]) + "-" + std::to_string(members[b]);
        int d = c.dominator_of[size_t(j)];
        if (d < 0 || d >= n) return "class " + std::to_string(j) + " has no dominator";
        for (int v : members)
            if (!g.has_edge(d, v))
                return "class " + std::to_string(j) + " not dominated by " + std::to_string(d) +
                       ": vertex " + std::to_string(v);
    }
    return std::nullopt;
}

std::optional<int> verify_total_dominating(const Graph& g, const std::vector<int>& s) {
    int n = g.vertex_count();
    Bitset in_set(n);
    for (int v : s) {
        if (v < 0 || v >= n) throw precondition_error("verify_total_dominating: id out of range");
        in_set.set(v);
    }
    for (int v = 0; v < n; ++v)
        if (!g.row(v).intersects(in_set)) return v;
    return std::nullopt;
}

std::optional<std::pair<int, int>> verify_separated_cluster(const Graph& g,
                                                            const std::vector<int>& s) {
    int n = g.vertex_count();
    for (int v : s)
        if (v < 0 || v >= n) throw precondition_error("verify_separated_cluster: id out of range");
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = a + 1; b < s.size(); ++b) {
            int u = s[a], v = s[b];
            if (u == v) continue;
            if (!g.has_edge(u, v) && g.row(u).intersects(g.row(v)))
                return std::make_pair(u, v);
        }
    return std::nullopt;
}

} // namespace cdgraph

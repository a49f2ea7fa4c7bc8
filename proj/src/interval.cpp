#include "cdgraph/interval.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace cdgraph {

namespace {

struct Event {
    long coord;
    int is_right; // lefts sort first at equal coordinates
    int vertex;
    bool operator<(const Event& o) const {
        return std::tie(coord, is_right, vertex) < std::tie(o.coord, o.is_right, o.vertex);
    }
};

std::vector<Event> sorted_events(const IntervalRep& rep) {
    std::vector<Event> ev;
    ev.reserve(size_t(rep.vertex_count()) * 2);
    for (int v = 0; v < rep.vertex_count(); ++v) {
        auto [l, r] = rep.intervals[size_t(v)];
        if (l >= r) throw precondition_error("degenerate interval for vertex " + std::to_string(v));
        ev.push_back({l, 0, v});
        ev.push_back({r, 1, v});
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

void require_canonical(const IntervalRep& rep, const char* op) {
    std::vector<long> coords;
    for (auto [l, r] : rep.intervals) {
        coords.push_back(l);
        coords.push_back(r);
    }
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end())
        throw precondition_error(std::string(op) + ": representation has shared endpoints");
}

} // namespace

IntervalRep canonicalize_rep(const IntervalRep& rep) {
    auto ev = sorted_events(rep);
    IntervalRep out;
    out.intervals.resize(rep.intervals.size());
    for (size_t i = 0; i < ev.size(); ++i) {
        auto& iv = out.intervals[size_t(ev[i].vertex)];
        (ev[i].is_right ? iv.second : iv.first) = long(i);
    }
    return out;
}

std::vector<std::vector<int>> maximal_cliques_sweep(const IntervalRep& rep) {
    require_canonical(rep, "maximal_cliques_sweep");
    auto ev = sorted_events(rep);
    Bitset active(rep.vertex_count());
    std::vector<std::vector<int>> cliques;
    bool last_was_left = false;
    for (const Event& e : ev) {
        if (e.is_right) {
            if (last_was_left) cliques.push_back(active.to_vector());
            active.reset(e.vertex);
            last_was_left = false;
        } else {
            active.set(e.vertex);
            last_was_left = true;
        }
    }
    return cliques;
}

std::vector<CliqueFamilyEntry> clique_family_block(const IntervalRep& rep,
                                                   const std::vector<std::vector<int>>& cliques,
                                                   int clique_index) {
    const auto& clique = cliques[size_t(clique_index)];
    auto left = [&](int v) { return rep.intervals[size_t(v)].first; };
    auto right = [&](int v) { return rep.intervals[size_t(v)].second; };
    std::vector<int> l_list = clique, r_list = clique;
    std::sort(l_list.begin(), l_list.end(), [&](int a, int b) { return left(a) < left(b); });
    std::sort(r_list.begin(), r_list.end(), [&](int a, int b) { return right(a) < right(b); });

    std::vector<CliqueFamilyEntry> out;
    int t = int(clique.size());
    for (int p = 1; p <= t; ++p)
        for (int q = 1; q <= t; ++q) {
            long lo = left(l_list[size_t(p - 1)]);
            long hi = right(r_list[size_t(q - 1)]);
            CliqueFamilyEntry e;
            e.clique_index = clique_index;
            e.p = p;
            e.q = q;
            for (int v : clique)
                if (left(v) >= lo && right(v) <= hi) e.members.push_back(v);
            if (e.members.empty()) continue;
            e.helly_left = left(e.members[0]);
            e.helly_right = right(e.members[0]);
            for (int v : e.members) {
                e.helly_left = std::max(e.helly_left, left(v));
                e.helly_right = std::min(e.helly_right, right(v));
            }
            std::sort(e.members.begin(), e.members.end());
            out.push_back(std::move(e));
        }
    return out;
}

std::vector<CliqueFamilyEntry> clique_family(const IntervalRep& rep,
                                             const std::vector<std::vector<int>>& cliques) {
    std::map<std::vector<int>, CliqueFamilyEntry> seen;
    for (int i = 0; i < int(cliques.size()); ++i)
        for (auto& e : clique_family_block(rep, cliques, i))
            seen.try_emplace(e.members, std::move(e)); // (i,p,q) ascending: first wins
    std::vector<CliqueFamilyEntry> out;
    out.reserve(seen.size());
    for (auto& [members, e] : seen) out.push_back(std::move(e));
    std::sort(out.begin(), out.end(), [](const CliqueFamilyEntry& a, const CliqueFamilyEntry& b) {
        return std::tie(a.clique_index, a.p, a.q) < std::tie(b.clique_index, b.p, b.q);
    });
    return out;
}

ConflictGraph conflict_graph(const Graph& g, std::vector<CliqueFamilyEntry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const CliqueFamilyEntry& a, const CliqueFamilyEntry& b) {
                         return a.helly_right < b.helly_right;
                     });
    int n = g.vertex_count();
    int t = int(entries.size());
    ConflictGraph cg;
    cg.entries = std::move(entries);
    cg.weight.resize(size_t(t));
    cg.adj.assign(size_t(t), Bitset(t));

    std::vector<Bitset> members(size_t(t), Bitset(n)), reach(size_t(t), Bitset(n));
    for (int i = 0; i < t; ++i) {
        cg.weight[size_t(i)] = int(cg.entries[size_t(i)].members.size());
        for (int v : cg.entries[size_t(i)].members) {
            members[size_t(i)].set(v);
            reach[size_t(i)] |= g.row(v);
        }
    }
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            bool edge = members[size_t(i)].intersects(members[size_t(j)]) ||
                        reach[size_t(i)].intersects(members[size_t(j)]);
            if (!edge) {
                Bitset z = reach[size_t(i)];
                z &= reach[size_t(j)];
                z.andnot(members[size_t(i)]);
                z.andnot(members[size_t(j)]);
                edge = z.any();
            }
            if (edge) {
                cg.adj[size_t(i)].set(j);
                cg.adj[size_t(j)].set(i);
            }
        }
    return cg;
}

std::optional<std::array<int, 3>> check_umbrella_free(const ConflictGraph& cg) {
    int t = cg.size();
    std::vector<Bitset> non_adj(size_t(t), Bitset(t));
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j)
            if (j != i && !cg.adjacent(i, j)) non_adj[size_t(i)].set(j);
    }
    for (int i = 0; i < t; ++i) {
        for (int l = cg.adj[size_t(i)].next(i); l >= 0; l = cg.adj[size_t(i)].next(l)) {
            Bitset between = non_adj[size_t(i)];
            between &= non_adj[size_t(l)];
            int j = between.next(i);
            if (j >= 0 && j < l) return std::array<int, 3>{i, j, l};
        }
    }
    return std::nullopt;
}

MwisResult mwis_umbrella_dp(const ConflictGraph& cg) {
    int t = cg.size();
    std::vector<long> best(size_t(t));
    std::vector<int> pred(size_t(t), -1);
    for (int j = 0; j < t; ++j) {
        long base = 0;
        for (int i = 0; i < j; ++i)
            if (!cg.adjacent(i, j) && best[size_t(i)] > base) {
                base = best[size_t(i)];
                pred[size_t(j)] = i;
            }
        best[size_t(j)] = base + cg.weight[size_t(j)];
    }
    MwisResult res;
    int arg = -1;
    for (int j = 0; j < t; ++j)
        if (best[size_t(j)] > res.weight) {
            res.weight = best[size_t(j)];
            arg = j;
        }
    for (int j = arg; j >= 0; j = pred[size_t(j)]) res.chosen.push_back(j);
    std::reverse(res.chosen.begin(), res.chosen.end());
    for (size_t a = 0; a < res.chosen.size(); ++a)
        for (size_t b = a + 1; b < res.chosen.size(); ++b)
            if (cg.adjacent(res.chosen[a], res.chosen[b]))
                throw error("internal: DP chain contains an adjacent pair");
    return res;
}

IntervalClusterResult separated_cluster_interval(const Graph& g, const IntervalRep& rep) {
    if (auto bad = validate_interval_rep(g, rep))
        throw precondition_error("representation mismatch at pair " + std::to_string(bad->first) +
                                 "-" + std::to_string(bad->second));
    IntervalRep canon = canonicalize_rep(rep);
    auto cliques = maximal_cliques_sweep(canon);
    auto entries = clique_family(canon, cliques);
    ConflictGraph cg = conflict_graph(g, std::move(entries));
    if (auto viol = check_umbrella_free(cg))
        throw error("internal: conflict-graph order is not umbrella-free at triple " +
                    std::to_string((*viol)[0]) + "," + std::to_string((*viol)[1]) + "," +
                    std::to_string((*viol)[2]));
    MwisResult mwis = mwis_umbrella_dp(cg);

    IntervalClusterResult out;
    for (int idx : mwis.chosen) {
        const auto& e = cg.entries[size_t(idx)];
        out.chosen_cliques.push_back(e);
        out.cluster.vertices.insert(out.cluster.vertices.end(), e.members.begin(),
                                    e.members.end());
    }
    std::sort(out.cluster.vertices.begin(), out.cluster.vertices.end());
    if (int(out.cluster.vertices.size()) != mwis.weight ||
        std::adjacent_find(out.cluster.vertices.begin(), out.cluster.vertices.end()) !=
            out.cluster.vertices.end())
        throw error("internal: chosen cliques overlap");
    if (auto bad = verify_separated_cluster(g, out.cluster.vertices))
        throw error("internal: interval result is not a separated-cluster: pair " +
                    std::to_string(bad->first) + "-" + std::to_string(bad->second));
    out.size = int(out.cluster.vertices.size());
    return out;
}

} // namespace cdgraph

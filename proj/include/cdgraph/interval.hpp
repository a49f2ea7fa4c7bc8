#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cdgraph/oracles.hpp"
#include "cdgraph/recognition.hpp"

namespace cdgraph {

// Remaps endpoints to 0..2n-1 keeping their order, lefts before rights at
// equal coordinates, so touching closed intervals stay touching. The
// intersection graph is unchanged and all endpoints become distinct.
IntervalRep canonicalize_rep(const IntervalRep& rep);

// Left-to-right sweep over a canonical representation; at most n cliques.
std::vector<std::vector<int>> maximal_cliques_sweep(const IntervalRep& rep);

// One clique of the family: the members of clique `clique_index` whose
// intervals lie inside [l(p-th by left), r(q-th by right)].
struct CliqueFamilyEntry {
    int clique_index = 0;
    int p = 0, q = 0; // 1-based positions into the left/right orderings
    std::vector<int> members;
    long helly_left = 0, helly_right = 0;
};

// Every nonempty (p,q) combination of one block, including duplicates.
std::vector<CliqueFamilyEntry> clique_family_block(const IntervalRep& rep,
                                                   const std::vector<std::vector<int>>& cliques,
                                                   int clique_index);

// All blocks, deduplicated by member set keeping the smallest provenance.
std::vector<CliqueFamilyEntry> clique_family(const IntervalRep& rep,
                                             const std::vector<std::vector<int>>& cliques);

struct ConflictGraph {
    std::vector<CliqueFamilyEntry> entries; // ordered by Helly right endpoint
    std::vector<int> weight;
    std::vector<Bitset> adj;
    int size() const { return int(entries.size()); }
    bool adjacent(int i, int j) const { return adj[size_t(i)].test(j); }
};

// Entries become adjacent when they share a vertex, see an edge between them,
// or have an outside common neighbor of a member each.
ConflictGraph conflict_graph(const Graph& g, std::vector<CliqueFamilyEntry> entries);

// A triple i<j<l with an i-l edge but neither i-j nor j-l, if any.
std::optional<std::array<int, 3>> check_umbrella_free(const ConflictGraph& cg);

struct MwisResult {
    long weight = 0;
    std::vector<int> chosen; // entry indices, ascending in the order
};

// Chain DP over the umbrella-free order: consecutive non-adjacency along the
// order propagates to all pairs.
MwisResult mwis_umbrella_dp(const ConflictGraph& cg);

struct IntervalClusterResult {
    int size = 0;
    SeparatedCluster cluster;
    std::vector<CliqueFamilyEntry> chosen_cliques;
};

IntervalClusterResult separated_cluster_interval(const Graph& g, const IntervalRep& rep);

} // namespace cdgraph

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdgraph {

// The four 6-vertex obstruction graphs: C6 plus 0..3 chords added inside one
// partite side. On a 3-vertex side any two chords share an endpoint, so each
// chord count gives a single graph up to isomorphism.
std::vector<Graph> chorded_c6_family();

struct ChordedC6Witness {
    int chord_count = 0;          // 0 = plain C6
    std::array<int, 6> vertices;  // x1,x2,x3 independent side, then v1,v2,v3
};

// Finds an induced C6-with-chords member: an independent triple x1,x2,x3 plus
// connectors v1,v2,v3 with vi adjacent to exactly the other two x's.
std::optional<ChordedC6Witness> find_chorded_c6(const Graph& g);

// Restricted to chord_count == 0 (a plain induced C6).
std::optional<ChordedC6Witness> find_induced_c6(const Graph& g);

struct Peo {
    std::vector<int> order; // for each v, later-ordered neighbors form a clique
};

bool is_valid_peo(const Graph& g, const Peo& peo);

// Maximum cardinality search + verification; nullopt iff not chordal.
std::optional<Peo> is_chordal(const Graph& g);

struct ChordalBipartiteReport {
    bool ok = false;
    std::optional<Bipartition> bipartition;
    std::vector<int> witness_cycle; // odd cycle, or induced cycle of length >= 6
};

// True iff bipartite and every induced cycle has length exactly 4. The cycle
// search enumerates induced paths; exponential in the worst case, meant for
// desk-scale validation.
ChordalBipartiteReport is_chordal_bipartite(const Graph& g);

bool is_diamond_free(const Graph& g);

// In a diamond-free graph every edge lies in exactly one maximal clique, so
// the maximal cliques are {u,v} + N(u) cap N(v) per edge (plus isolated
// singletons). Throws precondition_error when the input has a diamond.
std::vector<std::vector<int>> list_maximal_cliques_diamond_free(const Graph& g);

// Partition into two cliques, when the complement is bipartite.
std::optional<std::pair<std::vector<int>, std::vector<int>>> is_co_bipartite(const Graph& g);

struct IntervalRep {
    std::vector<std::pair<long, long>> intervals; // closed [left, right] per vertex
    int vertex_count() const { return int(intervals.size()); }
};

// Text format: one line per vertex "id left right"; ids must cover 0..n-1.
IntervalRep parse_interval_rep(std::string_view text);
std::string serialize_interval_rep(const IntervalRep& rep);

Graph intersection_graph(const IntervalRep& rep);

// Returns a pair where edge/overlap disagree, nullopt when rep matches g.
std::optional<std::pair<int, int>> validate_interval_rep(const Graph& g, const IntervalRep& rep);

// No interval properly contains another.
bool is_proper_rep(const IntervalRep& rep);

} // namespace cdgraph

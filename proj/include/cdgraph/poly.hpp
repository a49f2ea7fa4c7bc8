#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdgraph/oracles.hpp"
#include "cdgraph/recognition.hpp"

namespace cdgraph {

struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return int(pairs.size()); }
};

struct CliqueCover {
    std::vector<std::vector<int>> parts;
    // One independent vertex per part when produced by the chordal greedy;
    // equal sizes certify optimality.
    std::optional<std::vector<int>> witness_independent_set;
    int size() const { return int(parts.size()); }
};

// Thrown when a triangle-free precondition fails.
struct triangle_error : precondition_error {
    std::array<int, 3> triangle;
    explicit triangle_error(std::array<int, 3> t)
        : precondition_error("triangle found: " + std::to_string(t[0]) + "-" +
                             std::to_string(t[1]) + "-" + std::to_string(t[2])),
          triangle(t) {}
};

// Thrown when a C6-with-chords obstruction shows up where the graph was
// required to avoid the family.
struct obstruction_error : precondition_error {
    ChordedC6Witness witness;
    explicit obstruction_error(const ChordedC6Witness& w)
        : precondition_error("graph contains induced C6 plus " + std::to_string(w.chord_count) +
                             " chord(s)"),
          witness(w) {}
};

// Maximum cardinality matching via blossom contraction, O(n^3).
Matching max_matching_general(const Graph& g);

// Cover = matched pairs + singletons; minimum on triangle-free inputs.
CliqueCover clique_cover_trianglefree(const Graph& g);

// Greedy along the elimination order; the witness independent set certifies
// the cover size equals the independence number.
CliqueCover clique_cover_chordal(const Graph& g, const Peo& peo);

// For a set that is independent with pairwise distance exactly 2, returns a
// vertex adjacent to all of it. Throws obstruction_error when none exists.
int dominator_for_class(const Graph& g, const std::vector<int>& cls);

struct AuxColoringResult {
    int value = 0;
    CdColoring coloring;
    std::string strategy; // "matching" | "chordal" | "exact"
};

// Coloring through a minimum clique cover of the distance-2 graph; requires
// the obstruction family absent and no isolated vertices.
AuxColoringResult cd_chromatic_via_aux(const Graph& g,
                                       int oracle_limit = OracleLimits::clique_cover);

struct ChordalBipartiteSuiteResult {
    int value = 0;
    CdColoring coloring;
    TotalDominatingSet tds;
    SeparatedCluster cluster;
};

// One value, three certificates: the coloring, the dominator set (a minimum
// total dominating set), and the cover witness (a maximum separated-cluster).
ChordalBipartiteSuiteResult chordal_bipartite_suite(const Graph& g);

// Thrown when a 3K1-free precondition fails.
struct independent_triple_error : precondition_error {
    std::array<int, 3> triple;
    explicit independent_triple_error(std::array<int, 3> t)
        : precondition_error("independent triple found: " + std::to_string(t[0]) + " " +
                             std::to_string(t[1]) + " " + std::to_string(t[2])),
          triple(t) {}
};

// Distance-2 graph of a 3K1-free graph in O(n^2): complement when the square
// is complete, the cross-side rule when co-bipartite.
Graph threek1_aux_fastpath(const Graph& g);

} // namespace cdgraph

#pragma once

#include <string>
#include <vector>

#include "cdgraph/oracles.hpp"

namespace cdgraph {

struct Provenance {
    int original = -1; // >= 0: copy of this input vertex
    int gadget = -1;   // >= 0: owned by this gadget instance
    std::string role;  // "root", "leaf:i", "A:i:j", "B:i:j", "X:i:u", ...
};

struct ReductionOutput {
    Graph graph;
    long offset = 0; // additive constant in the value equality
    std::vector<Provenance> provenance;
};

struct RootedGadget {
    Graph graph;
    int root = 0;
    std::vector<std::string> role;
};

struct PairedGadget {
    Graph graph;
    int root_a = 0, root_b = 0;
    std::vector<std::string> role;
};

// 11-vertex gadget: a two-leaf star whose leaves each feed a K_{2,2}, the two
// bottom sides joined by a reversed perfect matching. Root has degree 2, all
// other vertices degree 3.
RootedGadget gadget_w_cubic();
CdColoring gadget_w_cubic_coloring(); // 4 classes

// Star K_{1,d-1} feeding d-1 copies of K_{d-1,d-1}; consecutive bottom sides
// matched. 2d^2-3d+2 vertices; d odd >= 5.
RootedGadget gadget_w_odd(int d);
CdColoring gadget_w_odd_coloring(int d); // 2(d-1) classes

// Two mirrored halves of 2d^2-5d+3 vertices each, roots adjacent; d even >= 4.
PairedGadget gadget_w_even(int d);
CdColoring gadget_w_even_coloring(int d); // 4(d-2) classes

// Bipartite max-degree-3 input; one gadget per degree-2 vertex, two per
// degree-1 vertex. Output is cubic and triangle-free; offset 4x+8y.
ReductionOutput reduce_totaldom_to_cdcolor_cubic(const Graph& g);

// Triangle-free (d-2)-regular input, d odd >= 5; two gadgets per vertex.
// Output d-regular triangle-free; offset 4n(d-1).
ReductionOutput reduce_regular_odd(const Graph& g, int d);

// Triangle-free (d-1)-regular input, d even >= 4; one gadget per vertex pair
// (0,1),(2,3),... Output d-regular triangle-free; offset 2n(d-2).
ReductionOutput reduce_regular_even(const Graph& g, int d);

struct C6FreeBipartiteOutput {
    Graph graph;
    Bipartition bipartition; // side_a = originals + universal, side_b = clique vertices
    int universal_vertex = 0;
    std::vector<std::vector<int>> cliques; // side_b vertex j represents cliques[j]
};

// Vertex-vs-maximal-clique incidence graph of a diamond-free input, plus a
// vertex adjacent to the whole clique side. The output has no induced C6.
C6FreeBipartiteOutput build_c6free_bipartite(const Graph& g);

struct GapFamilyOutput {
    Graph graph;
    CdColoring coloring_cert;
    TotalDominatingSet tds_cert;
    std::vector<Provenance> provenance;
};

// Connected d-regular family whose cd-chromatic certificate exceeds the
// total-domination certificate by at least n. Requires n even,
// n >= max(4, 4(d-3)), d >= 3.
GapFamilyOutput gap_family(int n, int d);
long gap_family_class_count(int n, int d);
long gap_family_tds_size(int n, int d);

// The (d-1)-regular intermediate: C_n plus d-3 rounds of a diagonal and the
// reflected chord matching. Exposed for structural tests.
Graph gap_family_backbone(int n, int d);

} // namespace cdgraph

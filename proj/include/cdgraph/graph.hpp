#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdgraph/bitset.hpp"
#include "cdgraph/errors.hpp"

namespace cdgraph {

// Simple undirected graph on vertex ids 0..n-1, immutable after construction.
// Adjacency is kept both as sorted vectors and as bit rows.
class Graph {
public:
    Graph() = default;

    // Validates and builds: rejects self-loops and out-of-range ids,
    // collapses duplicate edges.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return int(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const Bitset& row(int v) const { return rows_[v]; }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> rows_;
};

struct Bipartition {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

struct StructuralSummary {
    bool is_connected = false;
    std::optional<int> regular_degree;
    bool is_triangle_free = false;
    std::optional<Bipartition> bipartition;
    bool has_isolated_vertex = false;
};

// Text format: lines "u v"; a first line "n m" is treated as a header when it
// is consistent with the rest of the file; '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// Hop distances from v; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, int v);

// Edge uv iff 1 <= d(u,v) <= 2.
Graph square(const Graph& g);

// Edge uv iff d(u,v) == 2; equals square(g) minus E(g).
Graph aux_graph(const Graph& g);

Graph complement(const Graph& g);

StructuralSummary structural_queries(const Graph& g);

std::optional<Bipartition> bipartition_of(const Graph& g);

// Subgraph induced by `vertices` (need not be sorted), relabeled 0..k-1.
// id_map[new_id] = old_id.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> id_map;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

} // namespace cdgraph

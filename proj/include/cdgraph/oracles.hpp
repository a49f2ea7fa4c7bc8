#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdgraph {

// A proper coloring where every class is contained in some vertex's open
// neighborhood. dominator_of[j] is never itself in class j.
struct CdColoring {
    std::vector<int> class_of;     // vertex -> class index 0..k-1
    std::vector<int> dominator_of; // class index -> dominating vertex
    int class_count() const { return int(dominator_of.size()); }
    std::vector<std::vector<int>> classes() const;
};

struct TotalDominatingSet {
    std::vector<int> vertices;
};

// No two members at distance exactly 2; an independent set of the aux graph.
struct SeparatedCluster {
    std::vector<int> vertices;
};

struct OracleLimits {
    static constexpr int independent_set = 24;
    static constexpr int clique_cover = 20;
    static constexpr int cd_coloring = 20;
    static constexpr int total_domination = 24;
};

// All witnesses are deterministic; set-valued witnesses are the
// lexicographically smallest optimum.
std::pair<int, std::vector<int>>
max_independent_set_exact(const Graph& g, int limit = OracleLimits::independent_set);

std::pair<int, std::vector<std::vector<int>>>
min_clique_cover_exact(const Graph& g, int limit = OracleLimits::clique_cover);

// Throws precondition_error on isolated vertices (no cd-coloring exists).
std::pair<int, CdColoring>
cd_chromatic_exact(const Graph& g, int limit = OracleLimits::cd_coloring);

std::pair<int, TotalDominatingSet>
total_domination_exact(const Graph& g, int limit = OracleLimits::total_domination);

std::pair<int, SeparatedCluster>
separated_cluster_exact(const Graph& g, int limit = OracleLimits::independent_set);

// nullopt means the certificate is valid; otherwise a human-readable report.
std::optional<std::string> verify_cd_coloring(const Graph& g, const CdColoring& c);

// Returns a vertex with no neighbor in the set, if any.
std::optional<int> verify_total_dominating(const Graph& g, const std::vector<int>& s);

// Returns an offending pair at distance exactly 2, if any.
std::optional<std::pair<int, int>> verify_separated_cluster(const Graph& g,
                                                            const std::vector<int>& s);

} // namespace cdgraph

#include "cdgraph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

namespace cdgraph {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw parse_error("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.rows_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("edge endpoint out of range: " + std::to_string(u) + " " +
                              std::to_string(v));
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].test(v)) continue;
        g.rows_[u].set(v);
        g.rows_[v].set(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

std::vector<std::vector<long>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<long>> lines;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<long> toks;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' &&
                                      *ptr != '\t' && *ptr != '\r'))
                throw parse_error("malformed token in line: " + std::string(line));
            toks.push_back(value);
            i = size_t(ptr - line.data());
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    auto lines = tokenize_lines(text);
    for (const auto& l : lines)
        if (l.size() != 2) throw parse_error("expected two integers per line");

    // Header interpretation: first line is "n m" iff m matches the number of
    // remaining lines and all edges fit in 0..n-1.
    auto build = [&](int n, size_t from) {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(lines.size() - from);
        for (size_t i = from; i < lines.size(); ++i)
            edges.emplace_back(int(lines[i][0]), int(lines[i][1]));
        return Graph::from_edges(n, edges);
    };
    if (!lines.empty() && lines[0][0] >= 0 && lines[0][1] == long(lines.size() - 1)) {
        int n = int(lines[0][0]);
        bool fits = true;
        for (size_t i = 1; i < lines.size() && fits; ++i)
            fits = lines[i][0] >= 0 && lines[i][0] < n && lines[i][1] >= 0 && lines[i][1] < n &&
                   lines[i][0] != lines[i][1];
        if (fits) {
            Graph g = build(n, 1);
            return g;
        }
    }
    long max_id = -1;
    for (const auto& l : lines) max_id = std::max({max_id, l[0], l[1]});
    return build(int(max_id + 1), 0);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<int> distances_from(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw precondition_error("source vertex out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    dist[v] = 0;
    std::queue<int> q;
    q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

namespace {

// Rows of vertices within distance <= 2, self excluded.
std::vector<Bitset> two_ball_rows(const Graph& g) {
    int n = g.vertex_count();
    std::vector<Bitset> rows(n, Bitset(n));
    for (int v = 0; v < n; ++v) {
        Bitset acc = g.row(v);
        for (int u : g.neighbors(v)) acc |= g.row(u);
        acc.reset(v);
        rows[v] = std::move(acc);
    }
    return rows;
}

Graph graph_from_rows(int n, const std::vector<Bitset>& rows) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        rows[u].for_each([&](int v) {
            if (u < v) edges.emplace_back(u, v);
        });
    return Graph::from_edges(n, edges);
}

} // namespace

Graph square(const Graph& g) {
    return graph_from_rows(g.vertex_count(), two_ball_rows(g));
}

Graph aux_graph(const Graph& g) {
    auto rows = two_ball_rows(g);
    for (int v = 0; v < g.vertex_count(); ++v) rows[v].andnot(g.row(v));
    return graph_from_rows(g.vertex_count(), rows);
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    Bipartition bip;
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
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) (color[v] == 0 ? bip.side_a : bip.side_b).push_back(v);
    return bip;
}

StructuralSummary structural_queries(const Graph& g) {
    int n = g.vertex_count();
    StructuralSummary s;
    s.has_isolated_vertex = false;
    bool regular = n > 0;
    int deg0 = n > 0 ? g.degree(0) : 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) s.has_isolated_vertex = true;
        if (g.degree(v) != deg0) regular = false;
    }
    if (regular) s.regular_degree = deg0;

    s.is_connected = true;
    if (n > 0) {
        auto dist = distances_from(g, 0);
        for (int v = 0; v < n; ++v)
            if (dist[v] < 0) s.is_connected = false;
    }

    s.is_triangle_free = true;
    for (int u = 0; u < n && s.is_triangle_free; ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            if (g.row(u).intersects(g.row(v))) {
                s.is_triangle_free = false;
                break;
            }
        }

    s.bipartition = bipartition_of(g);
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    int n = g.vertex_count();
    std::vector<int> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int v : ids)
        if (v < 0 || v >= n) throw precondition_error("induced_subgraph: id out of range");
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < ids.size(); ++i)
        for (int w : g.neighbors(ids[i]))
            if (pos[w] > int(i)) edges.emplace_back(int(i), pos[w]);
    return {Graph::from_edges(int(ids.size()), edges), std::move(ids)};
}

} // namespace cdgraph

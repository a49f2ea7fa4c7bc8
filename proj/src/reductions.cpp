#include "cdgraph/reductions.hpp"

#include <algorithm>
#include <set>

#include "cdgraph/recognition.hpp"

namespace cdgraph {

namespace {

struct GraphBuilder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int add_vertex() { return n++; }
    void add_edge(int u, int v) { edges.emplace_back(u, v); }
    Graph build() const { return Graph::from_edges(n, edges); }
};

void require_output_shape(const Graph& g, int degree, const char* op) {
    auto s = structural_queries(g);
    if (!s.regular_degree || *s.regular_degree != degree)
        throw error(std::string(op) + ": output is not " + std::to_string(degree) + "-regular");
    if (!s.is_triangle_free) throw error(std::string(op) + ": output has a triangle");
}

} // namespace

RootedGadget gadget_w_cubic() {
    RootedGadget w;
    GraphBuilder b;
    int a = b.add_vertex();
    int leaf0 = b.add_vertex(), leaf1 = b.add_vertex();
    w.role = {"root", "leaf:0", "leaf:1"};
    b.add_edge(a, leaf0);
    b.add_edge(a, leaf1);
    std::vector<std::vector<int>> top(2), bot(2);
    for (int blk = 0; blk < 2; ++blk) {
        for (int j = 0; j < 2; ++j) {
            top[size_t(blk)].push_back(b.add_vertex());
            w.role.push_back("A:" + std::to_string(blk) + ":" + std::to_string(j));
        }
        for (int j = 0; j < 2; ++j) {
            bot[size_t(blk)].push_back(b.add_vertex());
            w.role.push_back("B:" + std::to_string(blk) + ":" + std::to_string(j));
        }
        for (int x : top[size_t(blk)]) {
            b.add_edge(blk == 0 ? leaf0 : leaf1, x);
            for (int y : bot[size_t(blk)]) b.add_edge(x, y);
        }
    }
    for (int j = 0; j < 2; ++j) b.add_edge(bot[0][size_t(j)], bot[1][size_t(1 - j)]);
    w.graph = b.build();
    w.root = a;
    return w;
}

CdColoring gadget_w_cubic_coloring() {
    // Vertices: 0=a 1,2=leaves 3,4=A:0 5,6=B:0 7,8=A:1 9,10=B:1.
    CdColoring c;
    c.class_of = {1, 0, 2, 1, 1, 0, 0, 3, 3, 2, 2};
    c.dominator_of = {3, 1, 7, 2};
    return c;
}

namespace {

// Shared layout for the star-plus-K_{d-1,d-1}-blocks halves: root, `blocks`
// leaves, then per block the top (A) side then the bottom (B) side, bottoms
// of consecutive block pairs matched in reverse.
struct Half {
    int root;
    std::vector<int> leaves;
    std::vector<std::vector<int>> top, bot;
};

Half build_half(GraphBuilder& b, std::vector<std::string>& role, int side_tag, int blocks,
                int side_size) {
    auto tag = [&](const std::string& base) {
        return side_tag < 0 ? base : base + ":" + std::to_string(side_tag);
    };
    Half h;
    h.root = b.add_vertex();
    role.push_back(tag("root"));
    for (int i = 0; i < blocks; ++i) {
        h.leaves.push_back(b.add_vertex());
        role.push_back(tag("leaf") + ":" + std::to_string(i));
        b.add_edge(h.root, h.leaves.back());
    }
    h.top.resize(size_t(blocks));
    h.bot.resize(size_t(blocks));
    for (int i = 0; i < blocks; ++i) {
        for (int j = 0; j < side_size; ++j) {
            h.top[size_t(i)].push_back(b.add_vertex());
            role.push_back(tag("A") + ":" + std::to_string(i) + ":" + std::to_string(j));
        }
        for (int j = 0; j < side_size; ++j) {
            h.bot[size_t(i)].push_back(b.add_vertex());
            role.push_back(tag("B") + ":" + std::to_string(i) + ":" + std::to_string(j));
        }
        for (int x : h.top[size_t(i)]) {
            b.add_edge(h.leaves[size_t(i)], x);
            for (int y : h.bot[size_t(i)]) b.add_edge(x, y);
        }
        if (i % 2 == 1)
            for (int j = 0; j < side_size; ++j)
                b.add_edge(h.bot[size_t(i - 1)][size_t(j)],
                           h.bot[size_t(i)][size_t(side_size - 1 - j)]);
    }
    return h;
}

// Classes for one half: per block, the bottom side plus its leaf (dominated
// by a top vertex) and the top side (dominated by the leaf, absorbing the
// root in block 0).
void half_coloring(const Half& h, CdColoring& c, int& next_class) {
    for (size_t i = 0; i < h.top.size(); ++i) {
        int bottom_class = next_class++;
        for (int y : h.bot[i]) c.class_of[size_t(y)] = bottom_class;
        c.class_of[size_t(h.leaves[i])] = bottom_class;
        c.dominator_of.push_back(h.top[i][0]);
        int top_class = next_class++;
        for (int x : h.top[i]) c.class_of[size_t(x)] = top_class;
        if (i == 0) c.class_of[size_t(h.root)] = top_class;
        c.dominator_of.push_back(h.leaves[i]);
    }
}

} // namespace

RootedGadget gadget_w_odd(int d) {
    if (d < 5 || d % 2 == 0)
        throw precondition_error("gadget_w_odd: d must be odd and at least 5");
    RootedGadget w;
    GraphBuilder b;
    Half h = build_half(b, w.role, -1, d - 1, d - 1);
    w.graph = b.build();
    w.root = h.root;
    return w;
}

CdColoring gadget_w_odd_coloring(int d) {
    GraphBuilder b;
    std::vector<std::string> role;
    Half h = build_half(b, role, -1, d - 1, d - 1);
    CdColoring c;
    c.class_of.assign(size_t(b.n), -1);
    int next = 0;
    half_coloring(h, c, next);
    return c;
}

PairedGadget gadget_w_even(int d) {
    if (d < 4 || d % 2 == 1)
        throw precondition_error("gadget_w_even: d must be even and at least 4");
    PairedGadget w;
    GraphBuilder b;
    Half h1 = build_half(b, w.role, 1, d - 2, d - 1);
    Half h2 = build_half(b, w.role, 2, d - 2, d - 1);
    b.add_edge(h1.root, h2.root);
    w.graph = b.build();
    w.root_a = h1.root;
    w.root_b = h2.root;
    return w;
}

CdColoring gadget_w_even_coloring(int d) {
    GraphBuilder b;
    std::vector<std::string> role;
    Half h1 = build_half(b, role, 1, d - 2, d - 1);
    Half h2 = build_half(b, role, 2, d - 2, d - 1);
    b.add_edge(h1.root, h2.root);
    CdColoring c;
    c.class_of.assign(size_t(b.n), -1);
    int next = 0;
    half_coloring(h1, c, next);
    half_coloring(h2, c, next);
    return c;
}

namespace {

// Appends a gadget graph, returns the id offset of its vertex 0.
int append_gadget(GraphBuilder& b, std::vector<Provenance>& prov, const Graph& gadget,
                  const std::vector<std::string>& role, int gadget_id) {
    int base = b.n;
    for (int v = 0; v < gadget.vertex_count(); ++v) {
        b.add_vertex();
        prov.push_back({-1, gadget_id, role[size_t(v)]});
    }
    for (auto [u, v] : gadget.edges()) b.add_edge(base + u, base + v);
    return base;
}

GraphBuilder seed_from(const Graph& g, std::vector<Provenance>& prov) {
    GraphBuilder b;
    b.n = g.vertex_count();
    b.edges = g.edges();
    for (int v = 0; v < g.vertex_count(); ++v) prov.push_back({v, -1, "original"});
    return b;
}

} // namespace

ReductionOutput reduce_totaldom_to_cdcolor_cubic(const Graph& g) {
    auto s = structural_queries(g);
    if (!s.bipartition)
        throw precondition_error("reduce_totaldom_to_cdcolor_cubic: input is not bipartite");
    if (s.has_isolated_vertex)
        throw precondition_error("reduce_totaldom_to_cdcolor_cubic: input has an isolated vertex");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3)
            throw precondition_error("reduce_totaldom_to_cdcolor_cubic: vertex " +
                                     std::to_string(v) + " has degree above 3");

    RootedGadget w = gadget_w_cubic();
    ReductionOutput out;
    GraphBuilder b = seed_from(g, out.provenance);
    long x = 0, y = 0;
    int gadget_id = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        int copies = g.degree(u) == 2 ? 1 : g.degree(u) == 1 ? 2 : 0;
        x += g.degree(u) == 2;
        y += g.degree(u) == 1;
        for (int c = 0; c < copies; ++c) {
            int base = append_gadget(b, out.provenance, w.graph, w.role, gadget_id++);
            b.add_edge(base + w.root, u);
        }
    }
    out.graph = b.build();
    out.offset = 4 * x + 8 * y;
    require_output_shape(out.graph, 3, "reduce_totaldom_to_cdcolor_cubic");
    return out;
}

ReductionOutput reduce_regular_odd(const Graph& g, int d) {
    if (d < 5 || d % 2 == 0) throw precondition_error("reduce_regular_odd: d must be odd >= 5");
    auto s = structural_queries(g);
    if (!s.regular_degree || *s.regular_degree != d - 2)
        throw precondition_error("reduce_regular_odd: input is not (d-2)-regular");
    if (!s.is_triangle_free)
        throw precondition_error("reduce_regular_odd: input has a triangle");

    RootedGadget w = gadget_w_odd(d);
    ReductionOutput out;
    GraphBuilder b = seed_from(g, out.provenance);
    int gadget_id = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int c = 0; c < 2; ++c) {
            int base = append_gadget(b, out.provenance, w.graph, w.role, gadget_id++);
            b.add_edge(base + w.root, u);
        }
    out.graph = b.build();
    out.offset = 4L * g.vertex_count() * (d - 1);
    require_output_shape(out.graph, d, "reduce_regular_odd");
    return out;
}

ReductionOutput reduce_regular_even(const Graph& g, int d) {
    if (d < 4 || d % 2 == 1) throw precondition_error("reduce_regular_even: d must be even >= 4");
    auto s = structural_queries(g);
    if (!s.regular_degree || *s.regular_degree != d - 1)
        throw precondition_error("reduce_regular_even: input is not (d-1)-regular");
    if (!s.is_triangle_free)
        throw precondition_error("reduce_regular_even: input has a triangle");
    if (g.vertex_count() % 2 != 0)
        throw precondition_error("reduce_regular_even: odd vertex count");

    PairedGadget w = gadget_w_even(d);
    ReductionOutput out;
    GraphBuilder b = seed_from(g, out.provenance);
    int gadget_id = 0;
    for (int u = 0; u + 1 < g.vertex_count(); u += 2) {
        int base = append_gadget(b, out.provenance, w.graph, w.role, gadget_id++);
        b.add_edge(base + w.root_a, u);
        b.add_edge(base + w.root_b, u + 1);
    }
    out.graph = b.build();
    out.offset = 2L * g.vertex_count() * (d - 2);
    require_output_shape(out.graph, d, "reduce_regular_even");
    return out;
}

C6FreeBipartiteOutput build_c6free_bipartite(const Graph& g) {
    auto cliques = list_maximal_cliques_diamond_free(g); // throws on a diamond
    int n = g.vertex_count();
    C6FreeBipartiteOutput out;
    out.universal_vertex = n;
    out.cliques = cliques;
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < int(cliques.size()); ++j) {
        int cj = n + 1 + j;
        edges.emplace_back(n, cj);
        for (int a : cliques[size_t(j)]) edges.emplace_back(a, cj);
    }
    out.graph = Graph::from_edges(n + 1 + int(cliques.size()), edges);
    for (int v = 0; v <= n; ++v) out.bipartition.side_a.push_back(v);
    for (int j = 0; j < int(cliques.size()); ++j) out.bipartition.side_b.push_back(n + 1 + j);
    return out;
}

Graph gap_family_backbone(int n, int d) {
    if (d < 3) throw precondition_error("gap_family: d must be at least 3");
    if (n < 4 || n % 2 != 0)
        throw precondition_error("gap_family: n must be even and at least 4");
    if (n < 4 * (d - 3))
        throw precondition_error("gap_family: n must be at least 4(d-3)");

    std::set<std::pair<int, int>> edges;
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (u == v || !edges.emplace(u, v).second)
            throw error("gap_family: backbone chord arithmetic produced a duplicate edge");
    };
    for (int i = 0; i < n; ++i) add(i, (i + 1) % n);
    for (int it = 1; it <= d - 3; ++it) {
        int a = it - 1;
        int bdiag = (a + n / 2) % n;
        add(a, bdiag); // diagonal between the two reflection fixpoints
        for (int j = 1; j < n / 2; ++j) add((a + j) % n, (a - j + n) % n);
    }
    Graph g = Graph::from_edges(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
    auto s = structural_queries(g);
    if (!s.regular_degree || *s.regular_degree != d - 1)
        throw error("gap_family: backbone is not (d-1)-regular");
    return g;
}

long gap_family_class_count(int n, int d) {
    return d % 2 == 1 ? long(n) * ((d / 2) * (d - 1) + 1)
                      : long(n) * ((d - 2) / 2 * (d - 1) + 2);
}

long gap_family_tds_size(int n, int d) {
    return d % 2 == 1 ? long(n) * (d / 2 + 1) : long(n) * ((d - 2) / 2 + 2);
}

namespace {

// One K_{d+1}-minus-an-edge block: returns {u, v, interior...}; u,v is the
// removed edge, both get attached to the root.
std::vector<int> append_block(GraphBuilder& b, std::vector<Provenance>& prov, int gadget_id,
                              int block_id, int d) {
    std::vector<int> verts;
    for (int j = 0; j < d + 1; ++j) {
        verts.push_back(b.add_vertex());
        std::string role = j == 0   ? "X:" + std::to_string(block_id) + ":u"
                           : j == 1 ? "X:" + std::to_string(block_id) + ":v"
                                    : "X:" + std::to_string(block_id) +
                                          ":w:" + std::to_string(j - 2);
        prov.push_back({-1, gadget_id, role});
    }
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!(i == 0 && j == 1)) b.add_edge(verts[i], verts[j]);
    return verts;
}

} // namespace

GapFamilyOutput gap_family(int n, int d) {
    Graph backbone = gap_family_backbone(n, d);
    GapFamilyOutput out;
    GraphBuilder b = seed_from(backbone, out.provenance);

    std::vector<int> class_of;
    std::vector<int> dominator_of;
    std::vector<int> tds;
    auto new_class = [&](int dom) {
        dominator_of.push_back(dom);
        return int(dominator_of.size()) - 1;
    };
    class_of.assign(size_t(n), -1);
    auto place = [&](int v, int cls) {
        if (size_t(v) >= class_of.size()) class_of.resize(size_t(v) + 1, -1);
        class_of[size_t(v)] = cls;
    };

    if (d % 2 == 1) {
        for (int host = 0; host < n; ++host) {
            int gadget_id = host;
            int root = b.add_vertex();
            out.provenance.push_back({-1, gadget_id, "root"});
            b.add_edge(root, host);
            tds.push_back(root);
            std::vector<int> leaf_class_members;
            for (int blk = 0; blk < d / 2; ++blk) {
                auto verts = append_block(b, out.provenance, gadget_id, blk, d);
                b.add_edge(root, verts[0]);
                b.add_edge(root, verts[1]);
                tds.push_back(verts[0]);
                leaf_class_members.push_back(verts[0]);
                leaf_class_members.push_back(verts[1]);
                for (size_t j = 2; j < verts.size(); ++j) {
                    int cls = new_class(verts[0]);
                    place(verts[j], cls);
                    if (blk == 0 && j == 2) place(root, cls); // root rides with one interior
                }
            }
            int leaf_cls = new_class(root);
            for (int v : leaf_class_members) place(v, leaf_cls);
            place(host, leaf_cls);
        }
    } else {
        for (int host = 0; host < n; host += 2) {
            int gadget_id = host / 2;
            int roots[2];
            roots[0] = b.add_vertex();
            out.provenance.push_back({-1, gadget_id, "root:1"});
            roots[1] = b.add_vertex();
            out.provenance.push_back({-1, gadget_id, "root:2"});
            b.add_edge(roots[0], roots[1]);
            b.add_edge(roots[0], host);
            b.add_edge(roots[1], host + 1);
            tds.push_back(roots[0]);
            tds.push_back(roots[1]);
            tds.push_back(host);
            tds.push_back(host + 1);
            for (int side = 0; side < 2; ++side) {
                std::vector<int> leaf_class_members;
                for (int blk = 0; blk < (d - 2) / 2; ++blk) {
                    auto verts = append_block(b, out.provenance, gadget_id,
                                              side * ((d - 2) / 2) + blk, d);
                    b.add_edge(roots[side], verts[0]);
                    b.add_edge(roots[side], verts[1]);
                    tds.push_back(verts[0]);
                    leaf_class_members.push_back(verts[0]);
                    leaf_class_members.push_back(verts[1]);
                    for (size_t j = 2; j < verts.size(); ++j)
                        place(verts[j], new_class(verts[0]));
                }
                int leaf_cls = new_class(roots[side]);
                for (int v : leaf_class_members) place(v, leaf_cls);
                place(host + side, leaf_cls);
                place(roots[side], new_class(roots[1 - side]));
            }
        }
    }

    out.graph = b.build();
    auto s = structural_queries(out.graph);
    if (!s.regular_degree || *s.regular_degree != d)
        throw error("gap_family: output is not d-regular");
    if (!s.is_connected) throw error("gap_family: output is not connected");

    out.coloring_cert.class_of = std::move(class_of);
    out.coloring_cert.dominator_of = std::move(dominator_of);
    std::sort(tds.begin(), tds.end());
    out.tds_cert.vertices = std::move(tds);

    if (long(out.coloring_cert.class_count()) != gap_family_class_count(n, d))
        throw error("gap_family: class count does not match the formula");
    if (long(out.tds_cert.vertices.size()) != gap_family_tds_size(n, d))
        throw error("gap_family: dominating-set size does not match the formula");
    if (auto report = verify_cd_coloring(out.graph, out.coloring_cert))
        throw error("gap_family: coloring certificate invalid: " + *report);
    if (auto uncovered = verify_total_dominating(out.graph, out.tds_cert.vertices))
        throw error("gap_family: dominating certificate misses vertex " +
                    std::to_string(*uncovered));
    return out;
}

} // namespace cdgraph

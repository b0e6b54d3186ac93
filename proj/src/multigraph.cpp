#include "graphpoly/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace graphpoly {

namespace {

void check_vertex(const Multigraph& g, VertexId v, const char* who) {
    if (v < 0 || v >= g.n())
        throw input_error(std::string(who) + ": vertex id " + std::to_string(v) +
                          " out of range for n=" + std::to_string(g.n()));
}

void check_edge(const Multigraph& g, EdgeId e, const char* who) {
    if (e < 0 || e >= g.m())
        throw input_error(std::string(who) + ": edge id " + std::to_string(e) +
                          " out of range for m=" + std::to_string(g.m()));
}

// Union-find with path halving; used by components() and contract_edges().
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

Multigraph::Multigraph(int vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count < 0) throw input_error("Multigraph: negative vertex count");
}

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges) : Multigraph(vertex_count) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) add_edge(e.tail, e.head);
}

EdgeId Multigraph::add_edge(VertexId tail, VertexId head) {
    check_vertex(*this, tail, "add_edge");
    check_vertex(*this, head, "add_edge");
    edges_.push_back(Edge{tail, head});
    return static_cast<EdgeId>(edges_.size()) - 1;
}

const Edge& Multigraph::edge(EdgeId e) const {
    check_edge(*this, e, "edge");
    return edges_[static_cast<std::size_t>(e)];
}

bool Multigraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

EdgeSubgraph make_edge_subgraph(const Multigraph& g, const std::vector<EdgeId>& edge_set) {
    EdgeSubgraph sub;
    sub.edge_of = edge_set;
    std::sort(sub.edge_of.begin(), sub.edge_of.end());
    std::vector<VertexId> local(static_cast<std::size_t>(g.n()), -1);
    std::vector<Edge> edges;
    edges.reserve(sub.edge_of.size());
    for (EdgeId e : sub.edge_of) {
        check_edge(g, e, "make_edge_subgraph");
        const Edge& pe = g.edge(e);
        for (VertexId v : {pe.tail, pe.head}) {
            if (local[static_cast<std::size_t>(v)] < 0) {
                local[static_cast<std::size_t>(v)] = static_cast<VertexId>(sub.vertex_of.size());
                sub.vertex_of.push_back(v);
            }
        }
        edges.push_back(Edge{local[static_cast<std::size_t>(pe.tail)],
                             local[static_cast<std::size_t>(pe.head)]});
    }
    sub.graph = Multigraph(static_cast<int>(sub.vertex_of.size()), std::move(edges));
    return sub;
}

Multigraph delete_edge(const Multigraph& g, EdgeId e) {
    check_edge(g, e, "delete_edge");
    Multigraph out(g.n());
    for (EdgeId i = 0; i < g.m(); ++i)
        if (i != e) out.add_edge(g.edge(i).tail, g.edge(i).head);
    return out;
}

Multigraph contract_edge(const Multigraph& g, EdgeId e) {
    check_edge(g, e, "contract_edge");
    const Edge& ce = g.edge(e);
    if (ce.is_loop()) return delete_edge(g, e);

    // Keep the smaller endpoint, shift everything above the larger one down.
    const VertexId keep = std::min(ce.tail, ce.head);
    const VertexId gone = std::max(ce.tail, ce.head);
    auto remap = [&](VertexId v) {
        if (v == gone) return keep;
        return v > gone ? v - 1 : v;
    };
    Multigraph out(g.n() - 1);
    for (EdgeId i = 0; i < g.m(); ++i) {
        if (i == e) continue;
        out.add_edge(remap(g.edge(i).tail), remap(g.edge(i).head));
    }
    return out;
}

Multigraph contract_edges(const Multigraph& g, const std::vector<EdgeId>& edge_set) {
    std::vector<bool> in_set(static_cast<std::size_t>(g.m()), false);
    for (EdgeId e : edge_set) {
        check_edge(g, e, "contract_edges");
        in_set[static_cast<std::size_t>(e)] = true;
    }
    DisjointSets dsu(g.n());
    for (EdgeId e = 0; e < g.m(); ++e)
        if (in_set[static_cast<std::size_t>(e)]) dsu.unite(g.edge(e).tail, g.edge(e).head);

    std::vector<VertexId> relabel(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    for (VertexId v = 0; v < g.n(); ++v) {
        int root = dsu.find(v);
        if (relabel[static_cast<std::size_t>(root)] < 0) relabel[static_cast<std::size_t>(root)] = next++;
    }
    Multigraph out(next);
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (in_set[static_cast<std::size_t>(e)]) continue;
        out.add_edge(relabel[static_cast<std::size_t>(dsu.find(g.edge(e).tail))],
                     relabel[static_cast<std::size_t>(dsu.find(g.edge(e).head))]);
    }
    return out;
}

Multigraph contract_pair(const Multigraph& g, VertexId u, VertexId v) {
    check_vertex(g, u, "contract_pair");
    check_vertex(g, v, "contract_pair");
    if (u == v) throw input_error("contract_pair: endpoints must be distinct");
    bool joined = false;
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ge = g.edge(e);
        if ((ge.tail == u && ge.head == v) || (ge.tail == v && ge.head == u)) {
            joined = true;
            break;
        }
    }
    if (!joined) throw input_error("contract_pair: no edge joins the given vertices");

    const VertexId keep = std::min(u, v);
    const VertexId gone = std::max(u, v);
    auto remap = [&](VertexId w) {
        if (w == gone) return keep;
        return w > gone ? w - 1 : w;
    };
    Multigraph out(g.n() - 1);
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ge = g.edge(e);
        bool between = (ge.tail == u && ge.head == v) || (ge.tail == v && ge.head == u);
        if (between) continue; // all u-v edges are removed, none becomes a loop
        out.add_edge(remap(ge.tail), remap(ge.head));
    }
    return out;
}

Multigraph subdivide_edge(const Multigraph& g, EdgeId e) {
    check_edge(g, e, "subdivide_edge");
    Multigraph out(g.n() + 1);
    const VertexId mid = g.n();
    for (EdgeId i = 0; i < g.m(); ++i) {
        if (i == e) {
            out.add_edge(g.edge(i).tail, mid);
        } else {
            out.add_edge(g.edge(i).tail, g.edge(i).head);
        }
    }
    out.add_edge(mid, g.edge(e).head);
    return out;
}

Multigraph disjoint_union(const Multigraph& g1, const Multigraph& g2) {
    Multigraph out(g1.n() + g2.n());
    for (const Edge& e : g1.edges()) out.add_edge(e.tail, e.head);
    for (const Edge& e : g2.edges()) out.add_edge(e.tail + g1.n(), e.head + g1.n());
    return out;
}

Multigraph one_point_join(const Multigraph& g1, const Multigraph& g2, VertexId v1, VertexId v2) {
    check_vertex(g1, v1, "one_point_join");
    check_vertex(g2, v2, "one_point_join");
    // g2's vertex v2 collapses onto g1's v1; other g2 vertices follow after g1's.
    auto remap2 = [&](VertexId v) {
        if (v == v2) return v1;
        return v < v2 ? v + g1.n() : v + g1.n() - 1;
    };
    Multigraph out(g1.n() + g2.n() - 1);
    for (const Edge& e : g1.edges()) out.add_edge(e.tail, e.head);
    for (const Edge& e : g2.edges()) out.add_edge(remap2(e.tail), remap2(e.head));
    return out;
}

std::vector<EdgeId> bridges(const Multigraph& g) {
    // Iterative DFS with low-links; the tree edge back to the parent is
    // skipped by edge id, so a parallel partner still counts as a back edge.
    const int n = g.n();
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ge = g.edge(e);
        if (ge.is_loop()) continue;
        adj[static_cast<std::size_t>(ge.tail)].push_back({ge.head, e});
        adj[static_cast<std::size_t>(ge.head)].push_back({ge.tail, e});
    }

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<EdgeId> result;
    int timer = 0;

    struct Frame {
        VertexId v;
        EdgeId via; // tree edge that discovered v, -1 at roots
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] >= 0) continue;
        stack.push_back({root, -1});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto& out = adj[static_cast<std::size_t>(f.v)];
            if (f.next < out.size()) {
                auto [to, via] = out[f.next++];
                if (via == f.via) continue;
                if (disc[static_cast<std::size_t>(to)] >= 0) {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(to)]);
                } else {
                    disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] = timer++;
                    stack.push_back({to, via});
                }
            } else {
                if (f.via >= 0) {
                    const Frame& parent = stack[stack.size() - 2];
                    if (low[static_cast<std::size_t>(f.v)] > disc[static_cast<std::size_t>(parent.v)])
                        result.push_back(f.via);
                    low[static_cast<std::size_t>(parent.v)] = std::min(
                        low[static_cast<std::size_t>(parent.v)], low[static_cast<std::size_t>(f.v)]);
                }
                stack.pop_back();
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Components components(const Multigraph& g) {
    DisjointSets dsu(g.n());
    for (const Edge& e : g.edges()) dsu.unite(e.tail, e.head);
    Components out;
    out.label.assign(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> root_label(static_cast<std::size_t>(g.n()), -1);
    for (VertexId v = 0; v < g.n(); ++v) {
        int root = dsu.find(v);
        if (root_label[static_cast<std::size_t>(root)] < 0)
            root_label[static_cast<std::size_t>(root)] = out.count++;
        out.label[static_cast<std::size_t>(v)] = root_label[static_cast<std::size_t>(root)];
    }
    return out;
}

std::uint64_t edge_subgraph_count(const Multigraph& g, int edge_cap) {
    if (g.m() > edge_cap)
        throw resource_error("edge-subset enumeration needs 2^" + std::to_string(g.m()) +
                             " subsets, above the cap of " + std::to_string(edge_cap) +
                             " edges (GRAPHPOLY_EDGE_CAP raises it)");
    return 1ULL << g.m();
}

std::string structural_key(const Multigraph& g) {
    std::vector<VertexId> relabel(static_cast<std::size_t>(g.n()), -1);
    int next = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(g.m()));
    for (const Edge& e : g.edges()) {
        for (VertexId v : {e.tail, e.head})
            if (relabel[static_cast<std::size_t>(v)] < 0) relabel[static_cast<std::size_t>(v)] = next++;
        VertexId a = relabel[static_cast<std::size_t>(e.tail)];
        VertexId b = relabel[static_cast<std::size_t>(e.head)];
        pairs.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(pairs.begin(), pairs.end());
    std::ostringstream out;
    out << g.n() << ":";
    for (const auto& [a, b] : pairs) out << a << "," << b << ";";
    return out.str();
}

Multigraph make_path(int vertices) {
    if (vertices < 1) throw input_error("make_path: need at least one vertex");
    Multigraph g(vertices);
    for (int v = 0; v + 1 < vertices; ++v) g.add_edge(v, v + 1);
    return g;
}

Multigraph make_cycle(int length) {
    if (length < 1) throw input_error("make_cycle: need at least one edge");
    if (length == 1) {
        Multigraph g(1);
        g.add_edge(0, 0);
        return g;
    }
    Multigraph g(length);
    for (int v = 0; v < length; ++v) g.add_edge(v, (v + 1) % length);
    return g;
}

Multigraph make_complete(int vertices) {
    Multigraph g(vertices);
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v) g.add_edge(u, v);
    return g;
}

Multigraph make_star(int leaves) {
    Multigraph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Multigraph make_dipole(int edge_count) {
    if (edge_count < 1) throw input_error("make_dipole: need at least one edge");
    Multigraph g(2);
    for (int i = 0; i < edge_count; ++i) g.add_edge(0, 1);
    return g;
}

Multigraph tree_from_pruefer(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : seq) {
        if (v < 0 || v >= n) throw input_error("tree_from_pruefer: label out of range");
        ++degree[static_cast<std::size_t>(v)];
    }
    Multigraph g(n);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                g.add_edge(leaf, v);
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(v)];
                break;
            }
        }
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (a < 0) {
                a = v;
            } else {
                g.add_edge(a, v);
                break;
            }
        }
    }
    return g;
}

} // namespace graphpoly

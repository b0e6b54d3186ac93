#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphpoly/errors.hpp"

namespace graphpoly {

using VertexId = int; // dense 0..n-1
using EdgeId = int;   // dense 0..m-1 in input order

// Default guard against the 2^m blow-up of edge-subset enumeration.
inline constexpr int kDefaultEdgeCap = 20;
// Default step budget for brute-force enumerations (k^n colorings, k^m flows).
inline constexpr std::uint64_t kDefaultWorkCap = 200'000'000ULL;

struct Edge {
    VertexId tail = 0;
    VertexId head = 0;
    bool is_loop() const { return tail == head; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with an orientation convention: every edge stores a
/// tail and a head. Loops and parallel edges are allowed and preserved.
/// Graph values are immutable once built; every operation returns a fresh
/// graph, so values can be shared between threads freely.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, std::vector<Edge> edges);

    // Builder-style; only meaningful while assembling a value.
    EdgeId add_edge(VertexId tail, VertexId head);

    int n() const { return vertex_count_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const;
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_loop() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// A materialized edge subgraph H <= G: its vertex set is exactly the set of
/// endpoints of the chosen edges, relabeled densely in order of first
/// occurrence. Original ids are remembered on both axes.
struct EdgeSubgraph {
    Multigraph graph;                  // vertices 0..n(H)-1
    std::vector<EdgeId> edge_of;       // H edge -> parent edge id, ascending
    std::vector<VertexId> vertex_of;   // H vertex -> parent vertex id
};

EdgeSubgraph make_edge_subgraph(const Multigraph& g, const std::vector<EdgeId>& edge_set);

// Removes edge e; vertex set unchanged, remaining edges keep relative order.
Multigraph delete_edge(const Multigraph& g, EdgeId e);

// Minor-style contraction: identifies the endpoints of e and drops e itself;
// edges parallel to e survive as loops. Contracting a loop deletes it.
Multigraph contract_edge(const Multigraph& g, EdgeId e);

// Contracts a whole edge set minor-style in one pass (union-find quotient).
// Every edge of the set is removed exactly once, so m drops by |edge_set|.
Multigraph contract_edges(const Multigraph& g, const std::vector<EdgeId>& edge_set);

// Paper-style contraction: removes ALL edges between u and v, then
// identifies the pair. Requires u != v and at least one connecting edge.
Multigraph contract_pair(const Multigraph& g, VertexId u, VertexId v);

// Replaces e by a two-edge path through a fresh vertex.
Multigraph subdivide_edge(const Multigraph& g, EdgeId e);

Multigraph disjoint_union(const Multigraph& g1, const Multigraph& g2);
Multigraph one_point_join(const Multigraph& g1, const Multigraph& g2, VertexId v1, VertexId v2);

// Edges whose deletion increases the component count. Loops are never
// bridges; one of two parallel edges is never a bridge.
std::vector<EdgeId> bridges(const Multigraph& g);

struct Components {
    int count = 0;
    std::vector<int> label; // vertex -> component index, by first discovery
};
Components components(const Multigraph& g);

std::uint64_t edge_subgraph_count(const Multigraph& g, int edge_cap = kDefaultEdgeCap);

/// Visits all 2^m edge subgraphs of g, empty subset first, in ascending
/// bitmask order. Throws resource_error when m exceeds edge_cap.
template <class Fn>
void for_each_edge_subgraph(const Multigraph& g, Fn&& fn, int edge_cap = kDefaultEdgeCap) {
    const std::uint64_t total = edge_subgraph_count(g, edge_cap);
    std::vector<EdgeId> subset;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        subset.clear();
        for (int e = 0; e < g.m(); ++e)
            if (mask >> e & 1ULL) subset.push_back(e);
        fn(make_edge_subgraph(g, subset));
    }
}

// Deterministic structural encoding used as a memoization key: vertex count
// plus the sorted multiset of endpoint pairs after relabeling vertices by
// first occurrence in the edge list. Equal keys imply isomorphic graphs;
// this is not a canonical form across isomorphism.
std::string structural_key(const Multigraph& g);

// Small generators used by tests, the corpus and the fuzzer.
Multigraph make_path(int vertices);
Multigraph make_cycle(int length);           // length >= 1; 1 = loop, 2 = dipole
Multigraph make_complete(int vertices);
Multigraph make_star(int leaves);
Multigraph make_dipole(int edge_count);      // two vertices, parallel edges
Multigraph tree_from_pruefer(const std::vector<int>& seq); // n = seq.size() + 2

} // namespace graphpoly

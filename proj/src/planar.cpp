#include "graphpoly/planar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace graphpoly {

namespace {

std::uint64_t checked_pow(int base, int exponent, std::uint64_t cap, const char* what) {
    std::uint64_t total = 1;
    for (int i = 0; i < exponent; ++i) {
        if (total > cap / static_cast<std::uint64_t>(base))
            throw resource_error(std::string(what) + " enumeration " + std::to_string(base) +
                                 "^" + std::to_string(exponent) + " exceeds the work cap of " +
                                 std::to_string(cap));
        total *= static_cast<std::uint64_t>(base);
    }
    return total;
}

} // namespace

PlaneGraph::PlaneGraph(Multigraph graph, RotationSystem rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    const int n = graph_.n();
    const int m = graph_.m();
    if (n < 1) throw embedding_error("plane graph needs at least one vertex");
    if (static_cast<int>(rotation_.order.size()) != n)
        throw embedding_error("rotation system must list every vertex exactly once");
    if (components(graph_).count != 1)
        throw embedding_error("plane graph must be connected");

    // Every dart exactly once, at the vertex its edge end belongs to.
    std::vector<int> seen(static_cast<std::size_t>(2 * m), 0);
    std::vector<Dart> succ(static_cast<std::size_t>(2 * m), -1);
    for (VertexId v = 0; v < n; ++v) {
        const auto& cycle = rotation_.order[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Dart d = cycle[i];
            if (d < 0 || d >= 2 * m) throw embedding_error("rotation lists an unknown dart");
            const Edge& e = graph_.edge(dart_edge(d));
            VertexId at = dart_is_head(d) ? e.head : e.tail;
            if (at != v)
                throw embedding_error("dart " + std::to_string(d) + " listed at vertex " +
                                      std::to_string(v) + " but belongs to vertex " +
                                      std::to_string(at));
            ++seen[static_cast<std::size_t>(d)];
            succ[static_cast<std::size_t>(d)] = cycle[(i + 1) % cycle.size()];
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (seen[static_cast<std::size_t>(d)] != 1)
            throw embedding_error("dart " + std::to_string(d) + " listed " +
                                  std::to_string(seen[static_cast<std::size_t>(d)]) + " times");

    // Trace faces: next(d) = succ(opposite(d)), lowest unvisited dart first.
    face_of_dart_.assign(static_cast<std::size_t>(2 * m), -1);
    for (Dart start = 0; start < 2 * m; ++start) {
        if (face_of_dart_[static_cast<std::size_t>(start)] >= 0) continue;
        Face face;
        Dart d = start;
        do {
            face_of_dart_[static_cast<std::size_t>(d)] = static_cast<int>(faces_.size());
            face.boundary.push_back(d);
            d = succ[static_cast<std::size_t>(dart_opposite(d))];
        } while (d != start);
        faces_.push_back(std::move(face));
    }
    if (m == 0) faces_.push_back(Face{}); // a single vertex sits in one face

    if (n - m + static_cast<int>(faces_.size()) != 2)
        throw embedding_error("Euler formula violated: n - m + f = " + std::to_string(n) + " - " +
                              std::to_string(m) + " + " + std::to_string(faces_.size()) +
                              " != 2; not a sphere embedding");
}

PlaneGraph geometric_dual(const PlaneGraph& pg) {
    const Multigraph& g = pg.graph();
    Multigraph dual(pg.face_count());
    for (EdgeId e = 0; e < g.m(); ++e)
        dual.add_edge(pg.face_of(dart_of(e, false)), pg.face_of(dart_of(e, true)));

    // The dual rotation at a face is its boundary trace; a primal dart keeps
    // its encoding, reread as the same side of the dual edge.
    RotationSystem rot;
    rot.order.reserve(pg.faces().size());
    for (const Face& f : pg.faces()) rot.order.push_back(f.boundary);
    return PlaneGraph(std::move(dual), std::move(rot));
}

PlaneGraph plane_subgraph(const PlaneGraph& pg, const std::vector<EdgeId>& edge_set) {
    EdgeSubgraph sub = make_edge_subgraph(pg.graph(), edge_set);
    std::vector<EdgeId> local_edge(static_cast<std::size_t>(pg.graph().m()), -1);
    for (std::size_t i = 0; i < sub.edge_of.size(); ++i)
        local_edge[static_cast<std::size_t>(sub.edge_of[i])] = static_cast<EdgeId>(i);

    RotationSystem rot;
    rot.order.resize(sub.vertex_of.size());
    for (std::size_t hv = 0; hv < sub.vertex_of.size(); ++hv) {
        const auto& parent_cycle =
            pg.rotation().order[static_cast<std::size_t>(sub.vertex_of[hv])];
        for (Dart d : parent_cycle) {
            EdgeId le = local_edge[static_cast<std::size_t>(dart_edge(d))];
            if (le >= 0) rot.order[hv].push_back(dart_of(le, dart_is_head(d)));
        }
    }
    return PlaneGraph(sub.graph, std::move(rot));
}

IdentityVerdict verify_eq4(const PlaneGraph& pg) {
    IdentityVerdict v;
    v.lhs = chromatic_polynomial(geometric_dual(pg).graph());
    v.rhs = IntPoly::variable() * flow_polynomial(pg.graph());
    v.pass = v.lhs == v.rhs;
    return v;
}

FlowAssignment face_boundary_flow(const PlaneGraph& pg, int face_index, int k) {
    if (face_index < 0 || face_index >= pg.face_count())
        throw input_error("face_boundary_flow: face index out of range");
    if (k < 1) throw input_error("face_boundary_flow: k must be >= 1");
    FlowAssignment t;
    t.modulus = k;
    t.values.assign(static_cast<std::size_t>(pg.graph().m()), 0);
    for (Dart d : pg.faces()[static_cast<std::size_t>(face_index)].boundary) {
        int& value = t.values[static_cast<std::size_t>(dart_edge(d))];
        value = ((value + (dart_is_head(d) ? -1 : 1)) % k + k) % k;
    }
    return t;
}

FlowAssignment flow_from_dual_coloring(const PlaneGraph& pg, const Coloring& dual_coloring,
                                       int k) {
    if (k < 1) throw input_error("flow_from_dual_coloring: k must be >= 1");
    if (dual_coloring.modulus != k)
        throw input_error("flow_from_dual_coloring: coloring modulus does not match k");
    if (static_cast<int>(dual_coloring.values.size()) != pg.face_count())
        throw input_error("flow_from_dual_coloring: coloring must cover exactly the faces");
    for (int c : dual_coloring.values)
        if (c < 0 || c >= k) throw input_error("flow_from_dual_coloring: color out of range");

    FlowAssignment t;
    t.modulus = k;
    t.values.assign(static_cast<std::size_t>(pg.graph().m()), 0);
    for (int f = 0; f < pg.face_count(); ++f) {
        const int color = dual_coloring.values[static_cast<std::size_t>(f)];
        if (color == 0) continue;
        for (Dart d : pg.faces()[static_cast<std::size_t>(f)].boundary) {
            int& value = t.values[static_cast<std::size_t>(dart_edge(d))];
            value = ((value + (dart_is_head(d) ? -color : color)) % k + k) % k;
        }
    }
    return t;
}

DualityVerdict verify_duality_correspondence(const PlaneGraph& pg, int k,
                                             std::uint64_t work_cap) {
    if (k < 1) throw input_error("verify_duality_correspondence: k must be >= 1");
    const Multigraph& g = pg.graph();
    const int f = pg.face_count();
    checked_pow(k, g.m(), work_cap, "balanced flow");
    checked_pow(k, f, work_cap, "dual coloring");

    DualityVerdict verdict;

    std::map<std::vector<int>, std::uint64_t> balanced; // flow values -> preimage count
    for_each_balanced_flow(
        g, k, [&](const FlowAssignment& t) { balanced.emplace(t.values, 0); }, work_cap);
    verdict.balanced_flows = balanced.size();
    for (const auto& [values, count] : balanced) {
        (void)count;
        if (std::find(values.begin(), values.end(), 0) == values.end())
            ++verdict.nowhere_zero_flows;
    }

    const Multigraph dual_graph = geometric_dual(pg).graph();

    Coloring s;
    s.modulus = k;
    s.values.assign(static_cast<std::size_t>(f), 0);
    while (true) {
        FlowAssignment t = flow_from_dual_coloring(pg, s, k);
        ++verdict.dual_colorings;

        auto it = balanced.find(t.values);
        if (it == balanced.end()) {
            verdict.detail = "image flow of a dual coloring is not balanced";
            return verdict;
        }
        ++it->second;

        const bool proper = is_proper(dual_graph, s);
        const bool nowhere_zero =
            std::find(t.values.begin(), t.values.end(), 0) == t.values.end();
        if (proper) ++verdict.proper_colorings;
        if (proper != nowhere_zero) {
            std::ostringstream msg;
            msg << "properness transport failed: coloring is " << (proper ? "proper" : "improper")
                << " but its flow is " << (nowhere_zero ? "nowhere zero" : "degenerate");
            verdict.detail = msg.str();
            return verdict;
        }

        int pos = f - 1;
        while (pos >= 0 && ++s.values[static_cast<std::size_t>(pos)] == k) {
            s.values[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }

    for (const auto& [values, count] : balanced) {
        if (count != static_cast<std::uint64_t>(k)) {
            std::ostringstream msg;
            msg << "a balanced flow has " << count << " dual-coloring preimages, expected " << k;
            verdict.detail = msg.str();
            return verdict;
        }
        (void)values;
    }
    verdict.pass = true;
    return verdict;
}

IdentityVerdict verify_eq5(const PlaneGraph& pg, int edge_cap) {
    const Multigraph& g = pg.graph();
    IntPoly sum;
    for_each_edge_subgraph(
        g,
        [&](const EdgeSubgraph& h) {
            IntPoly dual_chromatic;
            if (h.graph.m() > 0 && components(h.graph).count == 1) {
                PlaneGraph hp = plane_subgraph(pg, h.edge_of);
                dual_chromatic = chromatic_polynomial(geometric_dual(hp).graph());
            } else {
                // Disconnected subgraphs have no single sphere drawing here;
                // C(H*) = k F(H) substitutes for them (and for the empty H).
                dual_chromatic = IntPoly::variable() * flow_polynomial(h.graph);
            }
            if (dual_chromatic.is_zero()) return;
            IntPoly term = k_minus_one_power(
                               static_cast<unsigned long long>(g.m() - h.graph.m())) *
                           dual_chromatic;
            if (h.graph.m() % 2 == 1) term = -term;
            sum += term;
        },
        edge_cap);

    IdentityVerdict v;
    v.lhs = k_power(static_cast<unsigned long long>(g.m())) * chromatic_polynomial(g);
    v.rhs = k_power(static_cast<unsigned long long>(g.n() - 1)) * sum;
    v.pass = v.lhs == v.rhs;
    return v;
}

IdentityVerdict verify_eq6(const PlaneGraph& pg, int edge_cap) {
    const Multigraph& g = pg.graph();
    const Multigraph dual = geometric_dual(pg).graph();
    edge_subgraph_count(g, edge_cap);

    IdentityVerdict v;
    IntPoly sum;
    std::vector<EdgeId> to_contract;
    for (std::uint64_t mask = 0; mask < (1ULL << g.m()); ++mask) {
        // mask picks the edge set of H <= G; contract the duals of the rest.
        to_contract.clear();
        int kept = 0;
        for (EdgeId e = 0; e < g.m(); ++e) {
            if (mask >> e & 1ULL) {
                ++kept;
            } else {
                to_contract.push_back(e);
            }
        }
        Multigraph contracted = contract_edges(dual, to_contract);
        if (contracted.m() != kept) {
            // The L <-> H correspondence requires m(L) = m(H) term by term.
            v.pass = false;
            return v;
        }
        IntPoly c = chromatic_polynomial(contracted);
        if (c.is_zero()) continue;
        IntPoly term =
            k_minus_one_power(static_cast<unsigned long long>(dual.m() - contracted.m())) * c;
        if (contracted.m() % 2 == 1) term = -term;
        sum += term;
    }

    v.lhs = k_power(static_cast<unsigned long long>(dual.n() - 1)) * chromatic_polynomial(g);
    v.rhs = sum;
    v.pass = v.lhs == v.rhs;
    return v;
}

Cor2Verdict verify_cor2(const PlaneGraph& pg) {
    const int m = pg.graph().m();
    if (m <= 1) throw input_error("verify_cor2: requires m > 1");
    Cor2Verdict v;
    IntPoly dual_chromatic = chromatic_polynomial(geometric_dual(pg).graph());
    if (m % 2 == 1) dual_chromatic = -dual_chromatic;
    v.difference = chromatic_polynomial(pg.graph()) - dual_chromatic;
    try {
        v.quotient = div_exact(v.difference, k_minus_one_power(2));
        v.pass = true;
    } catch (const divisibility_error& err) {
        v.remainder = err.remainder();
        v.pass = false;
    }
    return v;
}

Cor3Report check_cor3(const PlaneGraph& pg) {
    const Multigraph& g = pg.graph();
    Cor3Report report;
    report.colorings3 = chromatic_polynomial(g).eval(3);
    const bool is_k2 = g.n() == 2 && g.m() == 1 && !g.edge(0).is_loop();
    report.hypothesis_holds = !is_k2 && report.colorings3 == 6;
    if (report.hypothesis_holds) {
        report.dual_colorings3 = chromatic_polynomial(geometric_dual(pg).graph()).eval(3);
        report.pass = report.dual_colorings3 > 0;
    }
    return report;
}

} // namespace graphpoly

#include "graphpoly/identity.hpp"

#include "graphpoly/chromatic.hpp"

namespace graphpoly {

IntPoly subgraph_sum(const Multigraph& g, int edge_cap) {
    IntPoly sum;
    for_each_edge_subgraph(
        g,
        [&](const EdgeSubgraph& h) {
            IntPoly f = flow_polynomial(h.graph);
            if (f.is_zero()) return; // most subgraphs have a bridge
            IntPoly term = k_minus_one_power(
                               static_cast<unsigned long long>(g.m() - h.graph.m())) *
                           f;
            if (h.graph.m() % 2 == 1) term = -term;
            sum += term;
        },
        edge_cap);
    return sum;
}

IdentityVerdict verify_theorem(const Multigraph& g, int edge_cap) {
    IdentityVerdict v;
    v.lhs = k_power(static_cast<unsigned long long>(g.m())) * chromatic_polynomial(g);
    v.rhs = k_power(static_cast<unsigned long long>(g.n())) * subgraph_sum(g, edge_cap);
    v.pass = v.lhs == v.rhs;
    return v;
}

WFunctionValue w_function(const Multigraph& g) {
    return WFunctionValue{flow_polynomial(g),
                          static_cast<long long>(g.n()) - static_cast<long long>(g.m())};
}

IntegerVerdict verify_eq10(const Multigraph& g, int k, std::uint64_t work_cap) {
    if (k < 1) throw input_error("verify_eq10: k must be >= 1");
    IntegerVerdict v;
    BigInt km = 1, kn = 1;
    for (int i = 0; i < g.m(); ++i) km *= k;
    for (int i = 0; i < g.n(); ++i) kn *= k;
    v.lhs = km * count_proper_colorings(g, k, work_cap);
    v.rhs = kn * balanced_degeneracy_sum(g, k, work_cap);
    if (g.m() % 2 == 1) v.rhs = -v.rhs;
    v.pass = v.lhs == v.rhs;
    return v;
}

} // namespace graphpoly

#pragma once

#include <cstdint>
#include <vector>

#include "graphpoly/multigraph.hpp"
#include "graphpoly/polynomial.hpp"

namespace graphpoly {

/// Flow mod k: one residue per edge, read against the stored tail/head
/// orientation. Reversing an edge and negating its value leaves every notion
/// below unchanged.
struct FlowAssignment {
    int modulus = 1;
    std::vector<int> values; // per edge, each in 0..modulus-1
};

/// True iff at every vertex the out-sum equals the in-sum mod k.
/// A loop feeds both sides equally and can never break balance.
bool is_balanced(const Multigraph& g, const FlowAssignment& t);

/// Number of zero edges of t (the degeneracy degree d(t)).
int degeneracy(const Multigraph& g, const FlowAssignment& t);

/// Flow polynomial. Recurrence: loops factor out as (k-1) each, any bridge
/// kills the polynomial, otherwise F(G) = F(G/e) - F(G-e) on the lowest
/// non-loop edge. Edgeless graphs give 1. Memoized like chromatic_polynomial.
IntPoly flow_polynomial(const Multigraph& g);

/// Brute-force oracle: counts balanced flows with no zero edge among all
/// k^m assignments. Requires k >= 1.
BigInt count_nowhere_zero_balanced_flows(const Multigraph& g, int k,
                                         std::uint64_t work_cap = kDefaultWorkCap);

/// The subgraph carrying the nonzero edges of a balanced flow; its
/// restriction of t stays balanced and nowhere zero.
EdgeSubgraph support_subgraph(const Multigraph& g, const FlowAssignment& t);

/// Sum of (1-k)^{d(t)} over all balanced flows t, computed by enumeration.
BigInt balanced_degeneracy_sum(const Multigraph& g, int k,
                               std::uint64_t work_cap = kDefaultWorkCap);

/// Visits every balanced flow mod k (including degenerate ones) in
/// lexicographic order of the value vector.
template <class Fn>
void for_each_balanced_flow(const Multigraph& g, int k, Fn&& fn,
                            std::uint64_t work_cap = kDefaultWorkCap) {
    if (k < 1) throw input_error("for_each_balanced_flow: k must be >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < g.m(); ++i) {
        if (total > work_cap / static_cast<std::uint64_t>(k))
            throw resource_error("flow enumeration k^m = " + std::to_string(k) + "^" +
                                 std::to_string(g.m()) + " exceeds the work cap of " +
                                 std::to_string(work_cap));
        total *= static_cast<std::uint64_t>(k);
    }
    FlowAssignment t;
    t.modulus = k;
    t.values.assign(static_cast<std::size_t>(g.m()), 0);
    while (true) {
        if (is_balanced(g, t)) fn(t);
        int pos = g.m() - 1; // lexicographic: last edge varies fastest
        while (pos >= 0 && ++t.values[static_cast<std::size_t>(pos)] == k) {
            t.values[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

} // namespace graphpoly

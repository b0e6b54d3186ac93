#pragma once

#include "graphpoly/flows.hpp"
#include "graphpoly/multigraph.hpp"
#include "graphpoly/polynomial.hpp"

namespace graphpoly {

/// Outcome of a polynomial identity check: both sides are kept so that a
/// failure report can render them exactly.
struct IdentityVerdict {
    bool pass = false;
    IntPoly lhs;
    IntPoly rhs;
};

/// Outcome of an exact integer identity check at one concrete k.
struct IntegerVerdict {
    bool pass = false;
    BigInt lhs;
    BigInt rhs;
};

/// The Whitney-style weight w(H,k) = k^{k_shift} * flow_poly with
/// k_shift = n(H) - m(H); the shift may be negative, so the pair is kept
/// instead of a Laurent polynomial.
struct WFunctionValue {
    IntPoly flow_poly;
    long long k_shift = 0;
    friend bool operator==(const WFunctionValue&, const WFunctionValue&) = default;
};

/// Sum over all edge subgraphs H of (-1)^{m(H)} (k-1)^{m(G)-m(H)} F(H,k):
/// the subgraph side of the chromatic identity with denominators cleared.
IntPoly subgraph_sum(const Multigraph& g, int edge_cap = kDefaultEdgeCap);

/// Checks k^m * C(G,k) == k^n * subgraph_sum(G) as exact polynomials.
IdentityVerdict verify_theorem(const Multigraph& g, int edge_cap = kDefaultEdgeCap);

WFunctionValue w_function(const Multigraph& g);

/// Checks k^m * C(G,k) == (-1)^m * k^n * sum over balanced flows of
/// (1-k)^{d(t)}, as exact integers, with C(G,k) taken from the brute-force
/// coloring count.
IntegerVerdict verify_eq10(const Multigraph& g, int k,
                           std::uint64_t work_cap = kDefaultWorkCap);

} // namespace graphpoly

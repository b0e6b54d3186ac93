#pragma once

#include <cstdint>
#include <vector>

#include "graphpoly/multigraph.hpp"
#include "graphpoly/polynomial.hpp"

namespace graphpoly {

/// Vertex coloring with values in the residues mod k.
struct Coloring {
    int modulus = 1;
    std::vector<int> values; // per vertex, each in 0..modulus-1
};

bool is_proper(const Multigraph& g, const Coloring& c);

/// Chromatic polynomial via deletion-contraction with parallel-edge
/// deduplication and a loop short-circuit. Memoized process-wide on a
/// structural key; concurrent calls return identical results.
IntPoly chromatic_polynomial(const Multigraph& g);

/// Brute-force oracle: counts proper colorings by enumerating all k^n maps.
/// k = 0 counts the empty coloring only (1 iff n = 0).
BigInt count_proper_colorings(const Multigraph& g, int k,
                              std::uint64_t work_cap = kDefaultWorkCap);

} // namespace graphpoly

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphpoly/chromatic.hpp"
#include "graphpoly/flows.hpp"
#include "graphpoly/identity.hpp"
#include "graphpoly/multigraph.hpp"
#include "graphpoly/polynomial.hpp"

namespace graphpoly {

// A dart is one end of one edge, encoded as 2*edge for the tail side and
// 2*edge+1 for the head side. Walking a dart means traversing its edge away
// from that end, so a tail dart runs with the stored orientation.
using Dart = int;

inline Dart dart_of(EdgeId e, bool head_side) { return 2 * e + (head_side ? 1 : 0); }
inline EdgeId dart_edge(Dart d) { return d / 2; }
inline bool dart_is_head(Dart d) { return (d & 1) != 0; }
inline Dart dart_opposite(Dart d) { return d ^ 1; }

/// Per-vertex counterclockwise cyclic order of the darts at that vertex.
struct RotationSystem {
    std::vector<std::vector<Dart>> order;
    friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// One face of the embedding: its boundary as a cyclic dart sequence in
/// trace order. A tail dart on the boundary crosses its edge along the
/// stored orientation, a head dart against it.
struct Face {
    std::vector<Dart> boundary;
};

/// A connected multigraph together with a rotation system that traces to a
/// sphere embedding. Construction validates everything: every dart listed
/// exactly once at its own endpoint, the graph connected, and Euler's
/// formula n - m + f = 2 for the traced faces.
///
/// Faces are traced with the fixed successor rule next(d) = rotation
/// successor of opposite(d) at its vertex, starting from the lowest
/// unvisited dart, so duals are reproducible byte for byte.
class PlaneGraph {
public:
    PlaneGraph(Multigraph graph, RotationSystem rotation);

    const Multigraph& graph() const { return graph_; }
    const RotationSystem& rotation() const { return rotation_; }
    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(Dart d) const { return face_of_dart_[static_cast<std::size_t>(d)]; }

private:
    Multigraph graph_;
    RotationSystem rotation_;
    std::vector<Face> faces_;
    std::vector<int> face_of_dart_;
};

/// Geometric dual: one vertex per face, one edge per primal edge (same edge
/// ids) joining the faces on its two sides; a bridge dualizes to a loop.
/// The dual rotation at a face is its boundary trace, which keeps the dual
/// a valid sphere embedding with n(dual) = f and m(dual) = m.
PlaneGraph geometric_dual(const PlaneGraph& pg);

/// Restriction of the embedding to an edge subset. The subset must induce a
/// connected nonempty subgraph; it inherits the parent rotation order.
PlaneGraph plane_subgraph(const PlaneGraph& pg, const std::vector<EdgeId>& edge_set);

/// Checks C(dual, k) == k * F(G, k) as exact polynomials.
IdentityVerdict verify_eq4(const PlaneGraph& pg);

/// The +/-1 circulation along one face boundary: +1 on edges crossed with
/// their orientation, k-1 against, 0 elsewhere; an edge with the same face
/// on both sides cancels to 0. Always balanced.
FlowAssignment face_boundary_flow(const PlaneGraph& pg, int face_index, int k);

/// The linear combination sum_faces s*(face) * face_boundary_flow(face)
/// mod k. Always balanced.
FlowAssignment flow_from_dual_coloring(const PlaneGraph& pg, const Coloring& dual_coloring, int k);

/// Joint check of the coloring-to-flow correspondence: every balanced flow
/// on the primal has exactly k dual-coloring preimages, no other flow is
/// hit, and a dual coloring is proper iff its image flow is nowhere zero.
struct DualityVerdict {
    bool pass = false;
    std::uint64_t dual_colorings = 0;
    std::uint64_t balanced_flows = 0;
    std::uint64_t nowhere_zero_flows = 0;
    std::uint64_t proper_colorings = 0;
    std::string detail; // first violation, empty on pass
};
DualityVerdict verify_duality_correspondence(const PlaneGraph& pg, int k,
                                             std::uint64_t work_cap = kDefaultWorkCap);

/// Subgraph-sum identity routed through duals, cleared form:
/// k^m C(G,k) == k^{n-1} * sum over H of (-1)^{m(H)} (k-1)^{m-m(H)} C(H*,k),
/// where C(H*,k) is the traced dual's chromatic polynomial for connected H
/// and k*F(H,k) for empty or disconnected H.
IdentityVerdict verify_eq5(const PlaneGraph& pg, int edge_cap = kDefaultEdgeCap);

/// Dual form over contractions of the dual, cleared with s = 1:
/// k^{n(G*)-1} C(G,k) == sum over subsets S of dual edges of
/// (-1)^{m(L)} (k-1)^{m(G*)-m(L)} C(L,k) with L = G*/S contracted
/// minor-style. Also asserts m(L) = m(H) for the complementary subgraph H.
IdentityVerdict verify_eq6(const PlaneGraph& pg, int edge_cap = kDefaultEdgeCap);

/// Congruence C(G,k) == (-1)^m C(G*,k) mod (k-1)^2 for m > 1, verified by
/// exact division of the difference.
struct Cor2Verdict {
    bool pass = false;
    IntPoly difference; // C(G) - (-1)^m C(G*)
    IntPoly quotient;   // difference / (k-1)^2 when pass
    IntPoly remainder;  // nonzero only on failure
};
Cor2Verdict verify_cor2(const PlaneGraph& pg);

/// Unique-3-coloring duality: when G is not K2 and has exactly one proper
/// 3-coloring up to renaming (C(G,3) = 6), the dual must be 3-colorable.
struct Cor3Report {
    bool hypothesis_holds = false;
    BigInt colorings3;      // C(G,3)
    BigInt dual_colorings3; // C(G*,3), computed only when the hypothesis holds
    bool pass = true;       // vacuously true when the hypothesis fails
};
Cor3Report check_cor3(const PlaneGraph& pg);

} // namespace graphpoly

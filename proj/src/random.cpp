#include "graphpoly/random.hpp"

namespace graphpoly {

Multigraph random_multigraph(SplitMix64& rng, int max_edges) {
    if (max_edges < 0) throw input_error("random_multigraph: negative edge bound");
    const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges) + 1));
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_edges) + 1));
    Multigraph g(n);
    for (int e = 0; e < m; ++e) {
        VertexId tail = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        VertexId head = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(n)));
        g.add_edge(tail, head);
    }
    return g;
}

Multigraph random_tree(SplitMix64& rng, int n) {
    if (n < 1) throw input_error("random_tree: need at least one vertex");
    if (n == 1) return Multigraph(1);
    std::vector<int> seq(static_cast<std::size_t>(n) - 2);
    for (int& s : seq) s = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    return tree_from_pruefer(seq);
}

} // namespace graphpoly

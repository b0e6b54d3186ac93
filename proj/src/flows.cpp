#include "graphpoly/flows.hpp"

#include <mutex>
#include <unordered_map>

namespace graphpoly {

namespace {

std::mutex flow_mutex;
std::unordered_map<std::string, IntPoly>& flow_cache() {
    static std::unordered_map<std::string, IntPoly> cache;
    return cache;
}

IntPoly flow_rec(const Multigraph& g) {
    if (g.m() == 0) return IntPoly(BigInt(1));

    // Loops always balance; each contributes a factor of (k-1).
    if (g.has_loop()) {
        unsigned long long loops = 0;
        Multigraph rest(g.n());
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) {
                ++loops;
            } else {
                rest.add_edge(e.tail, e.head);
            }
        }
        return k_minus_one_power(loops) * flow_rec(rest);
    }

    if (!bridges(g).empty()) return IntPoly{};

    const std::string key = structural_key(g);
    {
        std::lock_guard<std::mutex> lock(flow_mutex);
        auto it = flow_cache().find(key);
        if (it != flow_cache().end()) return it->second;
    }

    IntPoly result = flow_rec(contract_edge(g, 0)) - flow_rec(delete_edge(g, 0));

    std::lock_guard<std::mutex> lock(flow_mutex);
    flow_cache().emplace(key, result);
    return result;
}

void check_flow(const Multigraph& g, const FlowAssignment& t, const char* who) {
    if (static_cast<int>(t.values.size()) != g.m())
        throw input_error(std::string(who) + ": flow size does not match edge count");
    if (t.modulus < 1) throw input_error(std::string(who) + ": modulus must be >= 1");
    for (int v : t.values)
        if (v < 0 || v >= t.modulus) throw input_error(std::string(who) + ": value out of range");
}

} // namespace

bool is_balanced(const Multigraph& g, const FlowAssignment& t) {
    check_flow(g, t, "is_balanced");
    std::vector<long long> divergence(static_cast<std::size_t>(g.n()), 0);
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ge = g.edge(e);
        divergence[static_cast<std::size_t>(ge.tail)] += t.values[static_cast<std::size_t>(e)];
        divergence[static_cast<std::size_t>(ge.head)] -= t.values[static_cast<std::size_t>(e)];
    }
    for (long long d : divergence)
        if ((d % t.modulus + t.modulus) % t.modulus != 0) return false;
    return true;
}

int degeneracy(const Multigraph& g, const FlowAssignment& t) {
    check_flow(g, t, "degeneracy");
    int d = 0;
    for (int v : t.values)
        if (v == 0) ++d;
    return d;
}

IntPoly flow_polynomial(const Multigraph& g) { return flow_rec(g); }

BigInt count_nowhere_zero_balanced_flows(const Multigraph& g, int k, std::uint64_t work_cap) {
    if (k < 1) throw input_error("count_nowhere_zero_balanced_flows: k must be >= 1");
    BigInt count = 0;
    for_each_balanced_flow(
        g, k,
        [&](const FlowAssignment& t) {
            if (degeneracy(g, t) == 0) ++count;
        },
        work_cap);
    return count;
}

EdgeSubgraph support_subgraph(const Multigraph& g, const FlowAssignment& t) {
    check_flow(g, t, "support_subgraph");
    if (!is_balanced(g, t))
        throw contract_violation("support_subgraph: flow is not balanced");
    std::vector<EdgeId> support;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (t.values[static_cast<std::size_t>(e)] != 0) support.push_back(e);
    return make_edge_subgraph(g, support);
}

BigInt balanced_degeneracy_sum(const Multigraph& g, int k, std::uint64_t work_cap) {
    if (k < 1) throw input_error("balanced_degeneracy_sum: k must be >= 1");
    // Precompute (1-k)^d for d = 0..m.
    std::vector<BigInt> weight(static_cast<std::size_t>(g.m()) + 1);
    weight[0] = 1;
    for (std::size_t d = 1; d < weight.size(); ++d) weight[d] = weight[d - 1] * (1 - k);
    BigInt sum = 0;
    for_each_balanced_flow(
        g, k,
        [&](const FlowAssignment& t) { sum += weight[static_cast<std::size_t>(degeneracy(g, t))]; },
        work_cap);
    return sum;
}

} // namespace graphpoly

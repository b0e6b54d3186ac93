#include "graphpoly/chromatic.hpp"

#include <mutex>
#include <set>
#include <unordered_map>
#include <utility>

namespace graphpoly {

namespace {

std::mutex chromatic_mutex;
std::unordered_map<std::string, IntPoly>& chromatic_cache() {
    static std::unordered_map<std::string, IntPoly> cache;
    return cache;
}

Multigraph dedup_parallel(const Multigraph& g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    Multigraph out(g.n());
    for (const Edge& e : g.edges()) {
        auto key = std::minmax(e.tail, e.head);
        if (seen.insert(key).second) out.add_edge(e.tail, e.head);
    }
    return out;
}

IntPoly chromatic_rec(const Multigraph& g) {
    if (g.has_loop()) return IntPoly{};          // a loop forbids every coloring
    Multigraph s = dedup_parallel(g);
    if (s.m() == 0) return k_power(static_cast<unsigned long long>(s.n()));

    const std::string key = structural_key(s);
    {
        std::lock_guard<std::mutex> lock(chromatic_mutex);
        auto it = chromatic_cache().find(key);
        if (it != chromatic_cache().end()) return it->second;
    }

    // Pivot on the lowest-index edge (all edges are non-loops here).
    IntPoly result = chromatic_rec(delete_edge(s, 0)) - chromatic_rec(contract_edge(s, 0));

    std::lock_guard<std::mutex> lock(chromatic_mutex);
    chromatic_cache().emplace(key, result);
    return result;
}

} // namespace

bool is_proper(const Multigraph& g, const Coloring& c) {
    if (static_cast<int>(c.values.size()) != g.n())
        throw input_error("is_proper: coloring size does not match vertex count");
    for (int v : c.values)
        if (v < 0 || v >= c.modulus) throw input_error("is_proper: color out of range");
    for (const Edge& e : g.edges())
        if (c.values[static_cast<std::size_t>(e.tail)] == c.values[static_cast<std::size_t>(e.head)])
            return false;
    return true;
}

IntPoly chromatic_polynomial(const Multigraph& g) { return chromatic_rec(g); }

BigInt count_proper_colorings(const Multigraph& g, int k, std::uint64_t work_cap) {
    if (k < 0) throw input_error("count_proper_colorings: negative k");
    if (k == 0) return g.n() == 0 ? 1 : 0;
    if (g.n() == 0) return 1; // the empty coloring

    // k^n enumeration guard
    std::uint64_t total = 1;
    for (int i = 0; i < g.n(); ++i) {
        if (total > work_cap / static_cast<std::uint64_t>(k))
            throw resource_error("coloring enumeration k^n = " + std::to_string(k) + "^" +
                                 std::to_string(g.n()) + " exceeds the work cap of " +
                                 std::to_string(work_cap));
        total *= static_cast<std::uint64_t>(k);
    }

    std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
    BigInt count = 0;
    for (std::uint64_t step = 0;; ++step) {
        bool proper = true;
        for (const Edge& e : g.edges()) {
            if (color[static_cast<std::size_t>(e.tail)] == color[static_cast<std::size_t>(e.head)]) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;

        // odometer increment
        int pos = 0;
        while (pos < g.n() && ++color[static_cast<std::size_t>(pos)] == k) {
            color[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == g.n()) break;
        (void)step;
    }
    return count;
}

} // namespace graphpoly

#pragma once

#include <cstdint>

#include "graphpoly/multigraph.hpp"

namespace graphpoly {

/// splitmix64 (Steele, Lea, Flood 2014): tiny fixed-algorithm generator so
/// that a seed reproduces the same stream on every platform and build.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); bound must be positive. The modulo
    // bias is irrelevant at fuzzing scale and keeps the stream obvious.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Random multigraph: m in 0..max_edges, n in 1..max_edges+1, endpoints
/// drawn independently, so loops and parallel edges occur naturally.
Multigraph random_multigraph(SplitMix64& rng, int max_edges);

/// Uniform random labeled tree on n >= 1 vertices via a random Pruefer
/// sequence.
Multigraph random_tree(SplitMix64& rng, int n);

} // namespace graphpoly

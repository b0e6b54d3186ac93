#pragma once

// Test-only oracles and shorthands. The interpolation here is deliberately
// independent of the deletion-contraction implementations it cross-checks.

#include <initializer_list>
#include <vector>

#include "graphpoly/polynomial.hpp"

namespace graphpoly::testing {

inline IntPoly poly(std::initializer_list<long long> ascending) {
    std::vector<BigInt> coeffs;
    for (long long c : ascending) coeffs.emplace_back(c);
    return IntPoly::from_coeffs(std::move(coeffs));
}

// Unique polynomial of degree < values.size() through the points
// (x0, values[0]), (x0+1, values[1]), ... Newton forward differences with a
// common denominator keep everything in exact integers; the final division
// must come out exact for integer-coefficient inputs.
inline IntPoly interpolate_at(long long x0, const std::vector<BigInt>& values) {
    const std::size_t count = values.size();
    if (count == 0) return IntPoly{};
    std::vector<std::vector<BigInt>> diff{values};
    while (diff.back().size() > 1) {
        const auto& prev = diff.back();
        std::vector<BigInt> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
        diff.push_back(std::move(next));
    }

    BigInt d_factorial = 1;
    for (std::size_t j = 2; j < count; ++j) d_factorial *= static_cast<long long>(j);

    // q(y) interpolates at y = 0..d; scale by d! so every term is integral.
    IntPoly scaled;
    IntPoly falling(BigInt(1));
    BigInt partial = d_factorial; // d! / j!
    for (std::size_t j = 0; j < count; ++j) {
        scaled += IntPoly(diff[j][0] * partial) * falling;
        falling = falling * IntPoly::from_coeffs({BigInt(-static_cast<long long>(j)), BigInt(1)});
        if (j + 1 < count) partial /= static_cast<long long>(j + 1);
    }
    IntPoly q = div_exact(scaled, IntPoly(d_factorial));

    // substitute y = x - x0
    IntPoly result;
    IntPoly shift = IntPoly::from_coeffs({BigInt(-x0), BigInt(1)});
    for (int i = q.degree(); i >= 0; --i)
        result = result * shift + IntPoly(q.coeff(static_cast<std::size_t>(i)));
    return result;
}

} // namespace graphpoly::testing

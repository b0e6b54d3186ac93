#include <doctest.h>

#include "graphpoly/polynomial.hpp"
#include "graphpoly/random.hpp"
#include "helpers.hpp"

using namespace graphpoly;
using graphpoly::testing::interpolate_at;
using graphpoly::testing::poly;

namespace {

IntPoly random_poly(SplitMix64& rng) {
    std::vector<BigInt> coeffs(rng.below(6));
    for (auto& c : coeffs) c = static_cast<long long>(rng.below(21)) - 10;
    return IntPoly::from_coeffs(std::move(coeffs));
}

} // namespace

TEST_CASE("canonical form") {
    CHECK(IntPoly::from_coeffs({BigInt(1), BigInt(0), BigInt(0)}) == IntPoly(BigInt(1)));
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly{}.is_zero());
    CHECK(poly({0, 2, -3, 1}).degree() == 3);
    CHECK(IntPoly(BigInt(0)).is_zero());
}

TEST_CASE("arithmetic basics") {
    IntPoly k_minus_1 = poly({-1, 1});
    CHECK(k_minus_1 + IntPoly(BigInt(1)) == IntPoly::variable());
    CHECK(k_minus_1 * k_minus_1 == poly({1, -2, 1}));
    IntPoly p = poly({3, 0, -2, 7});
    CHECK((p - p).is_zero());
    CHECK(-p == poly({-3, 0, 2, -7}));
}

TEST_CASE("powers") {
    CHECK(pow(poly({-1, 1}), 0) == IntPoly(BigInt(1)));
    CHECK(pow(poly({-1, 1}), 3) == poly({-1, 3, -3, 1}));
    CHECK(pow(IntPoly::variable(), 2) == poly({0, 0, 1}));
    CHECK(k_minus_one_power(3) == poly({-1, 3, -3, 1}));
    CHECK(k_power(4) == poly({0, 0, 0, 0, 1}));
}

TEST_CASE("evaluation") {
    IntPoly c3 = poly({0, 2, -3, 1}); // k(k-1)(k-2)
    CHECK(c3.eval(3) == 6);
    CHECK(poly({7, 5, 1}).eval(0) == 7);
    CHECK(pow(poly({-1, 1}), 4).eval(5) == 256);
}

TEST_CASE("exact division") {
    CHECK(div_exact(poly({1, -2, 1}), poly({-1, 1})) == poly({-1, 1}));
    CHECK(div_exact(IntPoly{}, poly({-1, 1})).is_zero());
    IntPoly k4 = poly({0, -6, 11, -6, 1}); // k(k-1)(k-2)(k-3)
    CHECK(div_exact(k4 - k4, poly({1, -2, 1})).is_zero());
    CHECK_THROWS_AS(div_exact(poly({1, 1}), IntPoly{}), input_error);

    // remainder travels with the failure
    try {
        div_exact(poly({1, 0, 1}), poly({-1, 1}));
        FAIL("expected divisibility_error");
    } catch (const divisibility_error& e) {
        CHECK(e.remainder() == poly({2}));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        IntPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        if (!q.is_zero()) CHECK(div_exact(p * q, q) == p);
    }
}

TEST_CASE("rendering") {
    CHECK(to_pretty(poly({0, 2, -3, 1})) == "k^3 - 3*k^2 + 2*k");
    CHECK(to_coeff_list(poly({0, 2, -3, 1})) == "[0, 2, -3, 1]");
    CHECK(to_pretty(IntPoly{}) == "0");
    CHECK(to_coeff_list(IntPoly{}) == "[]");
    CHECK(to_pretty(poly({-1, 1})) == "k - 1");
    CHECK(to_pretty(poly({1, -1})) == "-k + 1");
    CHECK(to_pretty(poly({5})) == "5");
    CHECK(to_pretty(poly({0, 1})) == "k");
}

TEST_CASE("interpolation helper reconstructs polynomials") {
    SplitMix64 rng(77);
    for (int i = 0; i < 50; ++i) {
        IntPoly p = random_poly(rng);
        long long x0 = static_cast<long long>(rng.below(5));
        std::vector<BigInt> values;
        for (int j = 0; j <= p.degree() + 1; ++j) values.push_back(p.eval(x0 + j));
        CHECK(interpolate_at(x0, values) == p);
    }
}

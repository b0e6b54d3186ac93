#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/errors.hpp"

namespace graphpoly {

// Exact coefficients. Chromatic coefficients overflow 64 bits well before
// the enumeration caps do, so everything runs on arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over BigInt in the indeterminate k.
///
/// Canonical form: the coefficient vector never ends in a zero; the zero
/// polynomial is the empty vector. All operations preserve this.
class IntPoly {
public:
    IntPoly() = default; // zero polynomial
    explicit IntPoly(BigInt constant);
    explicit IntPoly(long long constant) : IntPoly(BigInt(constant)) {}

    // coeffs[i] is the coefficient of k^i; trailing zeros are trimmed.
    static IntPoly from_coeffs(std::vector<BigInt> coeffs);
    static IntPoly monomial(BigInt coeff, std::size_t power);
    static IntPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    BigInt leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

    BigInt eval(const BigInt& x) const; // Horner, exact

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned long long exponent);

// (k - 1)^e and k^e come up constantly in the identity verifiers.
IntPoly k_minus_one_power(unsigned long long exponent);
IntPoly k_power(unsigned long long exponent);

// Thrown by div_exact when q does not divide p; carries the remainder so
// failed congruence checks can report it.
class divisibility_error : public error {
public:
    divisibility_error(std::string what, IntPoly remainder)
        : error(std::move(what)), remainder_(std::move(remainder)) {}
    const IntPoly& remainder() const { return remainder_; }

private:
    IntPoly remainder_;
};

/// Exact division: returns r with p = q * r, throws divisibility_error
/// otherwise. q must be nonzero (input_error).
IntPoly div_exact(const IntPoly& p, const IntPoly& q);

// Renderings used by the CLI: "k^3 - 3*k^2 + 2*k" and "[0, 2, -3, 1]"
// (ascending coefficients). Zero renders as "0" and "[]".
std::string to_pretty(const IntPoly& p);
std::string to_coeff_list(const IntPoly& p);

} // namespace graphpoly

#include "graphpoly/polynomial.hpp"

#include <sstream>

namespace graphpoly {

IntPoly::IntPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

IntPoly IntPoly::from_coeffs(std::vector<BigInt> coeffs) {
    IntPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(BigInt coeff, std::size_t power) {
    IntPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(power + 1, BigInt(0));
        p.coeffs_[power] = std::move(coeff);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    IntPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly{};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPoly::from_coeffs(std::move(out));
}

IntPoly pow(const IntPoly& base, unsigned long long exponent) {
    IntPoly result(BigInt(1));
    IntPoly b = base;
    while (exponent > 0) {
        if (exponent & 1ULL) result = result * b;
        exponent >>= 1ULL;
        if (exponent > 0) b = b * b;
    }
    return result;
}

IntPoly k_minus_one_power(unsigned long long exponent) {
    return pow(IntPoly::from_coeffs({BigInt(-1), BigInt(1)}), exponent);
}

IntPoly k_power(unsigned long long exponent) {
    return IntPoly::monomial(1, exponent);
}

IntPoly div_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero()) throw input_error("div_exact: divisor is the zero polynomial");
    if (p.is_zero()) return IntPoly{};
    if (p.degree() < q.degree())
        throw divisibility_error("div_exact: degree of dividend below divisor", p);

    std::vector<BigInt> rem = p.coeffs();
    std::vector<BigInt> quot(p.degree() - q.degree() + 1, BigInt(0));
    const auto& d = q.coeffs();
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        BigInt& lead = rem[i + q.degree()];
        if (lead == 0) continue;
        if (lead % d.back() != 0)
            throw divisibility_error("div_exact: leading coefficient not divisible",
                                     IntPoly::from_coeffs(rem));
        BigInt factor = lead / d.back();
        quot[i] = factor;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= factor * d[j];
    }
    IntPoly remainder = IntPoly::from_coeffs(std::move(rem));
    if (!remainder.is_zero())
        throw divisibility_error("div_exact: nonzero remainder", remainder);
    return IntPoly::from_coeffs(std::move(quot));
}

std::string to_pretty(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        BigInt c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        bool negative = c < 0;
        BigInt mag = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (i == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "k";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::string to_coeff_list(const IntPoly& p) {
    std::ostringstream out;
    out << "[";
    const auto& cs = p.coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i > 0) out << ", ";
        out << cs[i];
    }
    out << "]";
    return out.str();
}

} // namespace graphpoly

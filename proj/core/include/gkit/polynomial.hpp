#pragma once

#include <string>
#include <vector>

#include "gkit/bigint.hpp"

namespace gkit {

// Integer-coefficient polynomial, coeffs[i] is the degree-i coefficient.
// Normalized: no trailing zero coefficient (the zero polynomial has an
// empty coefficient list).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    BigInt coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    BigRat evaluate(const BigRat& at) const;

    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // "1+6x+12x^2+8x^3" style, ascending degree, unit coefficients elided.
    std::string to_string(const std::string& var = "x") const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

} // namespace gkit

#include "gkit/polynomial.hpp"

#include <sstream>

namespace gkit {

BigRat IntPolynomial::evaluate(const BigRat& at) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + BigRat(*it);
    return acc;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        BigInt mag = abs(c);
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str();
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace gkit

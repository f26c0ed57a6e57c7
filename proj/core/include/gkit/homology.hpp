#pragma once

#include <string>
#include <vector>

#include "gkit/bigint.hpp"
#include "gkit/complex.hpp"
#include "gkit/field.hpp"
#include "gkit/verdict.hpp"

namespace gkit {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), BigInt(0)) {}

    BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
bool is_zero(const IntMatrix& m);

// Boundary map C_i -> C_(i-1) of the augmented (reduced) chain complex.
// Faces of each dimension are indexed lexicographically by sorted vertex
// list; dropping the j-th smallest vertex contributes sign (-1)^j. Valid
// for -1 <= i <= dim+1.
IntMatrix boundary_matrix(const SimplicialComplex& c, int i);

// Rank over the rationals (fraction-free Bareiss elimination) or GF(p)
// (modular elimination).
int rank_over(const IntMatrix& m, const FieldSpec& k);

// Reduced Betti numbers of the augmented complex, dimensions -1..dim.
struct BettiProfile {
    std::string label;
    FieldSpec field;
    std::vector<long> values; // values[j] is the Betti number in dimension j-1

    long beta(int dim) const {
        const int j = dim + 1;
        if (j < 0 || j >= static_cast<int>(values.size())) return 0;
        return values[static_cast<std::size_t>(j)];
    }
};

BettiProfile reduced_betti(const SimplicialComplex& c, const FieldSpec& k, std::string label = "");

// Reisner criterion: every face's link (the empty face included) has
// vanishing reduced homology below its dimension over k.
Verdict is_cm_reisner(const SimplicialComplex& c, const FieldSpec& k);

// Stanley criterion on the core: every face's link inside core(c) has the
// reduced homology of a sphere of its dimension over k.
Verdict is_gorenstein_homological(const SimplicialComplex& c, const FieldSpec& k);

} // namespace gkit

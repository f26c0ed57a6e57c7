#pragma once

#include <gmpxx.h>

#include <string>

namespace gkit {

// Exact arithmetic backing for counts, polynomial coefficients and matrix
// entries. GMP keeps every verdict free of overflow concerns.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRat& v) { return v.get_str(); }

} // namespace gkit

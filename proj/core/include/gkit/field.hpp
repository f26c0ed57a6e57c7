#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "gkit/errors.hpp"

namespace gkit {

// Coefficient field: the rationals or a prime field GF(p), p < 2^31.
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint32_t p);

    // "q" or "f<p>" (e.g. "f2"); parse also accepts "gf<p>".
    static FieldSpec parse(std::string_view token);
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
    friend bool operator<(const FieldSpec& a, const FieldSpec& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.p < b.p;
    }
};

bool is_prime(std::uint32_t n);

} // namespace gkit

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gkit {

// Subset of {0,...,63} as one machine word.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1; }
    constexpr void add(int v) { bits |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t rest = bits; rest; rest &= rest - 1)
            out.push_back(std::countr_zero(rest));
        return out;
    }

    // for (int v : set) iteration, ascending.
    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++() { rest &= rest - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

} // namespace gkit

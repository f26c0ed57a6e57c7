#include "gkit/canonical.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <vector>

namespace gkit {

namespace {

constexpr int kCanonicalCap = 16;

// Partial vertex ordering with, for every unplaced vertex, the adjacency
// column it would contribute next (bits toward already placed vertices,
// earliest placed at the most significant bit). Orderings are grown in
// lockstep so that every live state realizes the same minimal partial
// adjacency string.
struct State {
    std::vector<std::uint8_t> prefix;
    std::uint32_t used = 0;
    std::array<std::uint16_t, kCanonicalCap> col{};
};

std::string state_key(const State& s, int n) {
    std::string key;
    key.reserve(4 + 2 * static_cast<std::size_t>(n));
    key.push_back(static_cast<char>(s.used & 0xff));
    key.push_back(static_cast<char>((s.used >> 8) & 0xff));
    for (int v = 0; v < n; ++v) {
        if (s.used & (1u << v)) continue;
        key.push_back(static_cast<char>(s.col[static_cast<std::size_t>(v)] & 0xff));
        key.push_back(static_cast<char>((s.col[static_cast<std::size_t>(v)] >> 8) & 0xff));
    }
    return key;
}

// Runs the minimal-string search. When `reference` is non-null the search
// additionally tracks whether the identity ordering stays minimal; it
// aborts (returns empty) as soon as some ordering strictly beats it.
std::vector<std::uint8_t> minimal_ordering(const Graph& g, bool* identity_is_minimal) {
    const int n = g.order();
    if (n > kCanonicalCap)
        throw TooLarge("canonical form supported for at most 16 vertices, got " + std::to_string(n));

    std::vector<State> frontier(1);
    bool identity_alive = true;

    std::vector<State> next;
    std::unordered_set<std::string> seen;
    for (int depth = 0; depth < n; ++depth) {
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        next.clear();
        seen.clear();
        for (const State& s : frontier) {
            for (int v = 0; v < n; ++v) {
                if (s.used & (1u << v)) continue;
                const std::uint32_t c = s.col[static_cast<std::size_t>(v)];
                if (c > best) continue;
                if (c < best) {
                    best = c;
                    next.clear();
                    seen.clear();
                }
                State child;
                child.prefix = s.prefix;
                child.prefix.push_back(static_cast<std::uint8_t>(v));
                child.used = s.used | (1u << v);
                for (int u = 0; u < n; ++u) {
                    if (child.used & (1u << u)) continue;
                    child.col[static_cast<std::size_t>(u)] = static_cast<std::uint16_t>(
                        (s.col[static_cast<std::size_t>(u)] << 1) | (g.has_edge(u, v) ? 1 : 0));
                }
                if (seen.insert(state_key(child, n)).second) next.push_back(std::move(child));
            }
        }
        if (identity_alive) {
            std::uint32_t id_col = 0;
            for (int j = 0; j < depth; ++j)
                id_col = (id_col << 1) | (g.has_edge(depth, j) ? 1u : 0u);
            if (id_col != best) {
                identity_alive = false;
                if (identity_is_minimal) { *identity_is_minimal = false; return {}; }
            }
        }
        frontier.swap(next);
    }
    if (identity_is_minimal) *identity_is_minimal = identity_alive;
    return frontier.front().prefix;
}

} // namespace

Graph canonical_relabel(const Graph& g) {
    const std::vector<std::uint8_t> order = minimal_ordering(g, nullptr);
    std::vector<int> perm(order.begin(), order.end());
    return relabeled(g, perm);
}

CanonicalForm canonical_form(const Graph& g) { return {emit_graph6(canonical_relabel(g))}; }

bool is_canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalCap)
        throw TooLarge("canonical form supported for at most 16 vertices");
    bool minimal = true;
    minimal_ordering(g, &minimal);
    return minimal;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace gkit

#pragma once

#include <string>

#include "gkit/graph.hpp"

namespace gkit {

// Total-order key: equal keys iff isomorphic (supported for n <= 16).
// bytes is the graph6 encoding of the canonically relabeled graph.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        return a.bytes <=> b.bytes;
    }
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_relabel(const Graph& g);

// True iff g is already labeled so that its adjacency bit string (upper
// triangle, column-major) is lexicographically minimal over all relabelings.
// This is the acceptance test of the orderly generator.
bool is_canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace gkit

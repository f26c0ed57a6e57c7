#pragma once

#include <vector>

#include "gkit/bigint.hpp"
#include "gkit/graph.hpp"
#include "gkit/polynomial.hpp"

namespace gkit {

// Number of independent sets of each size; entry 0 is 1, length alpha+1.
std::vector<BigInt> independent_set_counts(const Graph& g);

int independence_number(const Graph& g);

// True iff alpha(g) <= bound; cheaper than computing alpha when the bound
// is small (used heavily as an enumeration prune).
bool independence_number_at_most(const Graph& g, int bound);

// Is there an independent set of exactly `size` vertices containing
// `require` and avoiding `forbid`? `require` must itself be independent.
bool has_independent_set(const Graph& g, int size, VertexSet require, VertexSet forbid);

IntPolynomial independence_polynomial(const Graph& g);

// All independent sets of exactly k vertices, sorted by bitset value.
std::vector<VertexSet> independent_sets_of_size(const Graph& g, int k);

// Complete list, sorted by bitset value.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

bool is_well_covered(const Graph& g);

// Definition-level W2 check: |V| >= 2 and every pair of disjoint nonempty
// independent sets extends to a pair of disjoint maximum independent sets.
// Well-coveredness (the single-set case) is checked first.
bool is_w2_definition(const Graph& g);

// Vertex-deletion criterion: every G \ v is well-covered with unchanged
// independence number. Requires n >= 2 and no isolated vertices.
bool is_w2_deletion(const Graph& g);

} // namespace gkit

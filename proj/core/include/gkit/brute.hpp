#pragma once

#include <string>
#include <vector>

#include "gkit/bigint.hpp"
#include "gkit/graph.hpp"
#include "gkit/homology.hpp"

namespace gkit::brute {

// Reference implementations kept deliberately naive and structurally
// unrelated to the main code paths; the verification suite and the unit
// tests compare against them.

// Scans all 2^n subsets (n <= 20).
std::vector<BigInt> independent_set_counts(const Graph& g);

std::vector<VertexSet> maximal_independent_sets(const Graph& g);

// Tries every vertex permutation (n <= 8).
bool isomorphic(const Graph& a, const Graph& b);

// Upper-triangle adjacency bits of the best relabeling, minimized over
// every permutation (n <= 8). '0'/'1' characters.
std::string min_adjacency_string(const Graph& g);

// Number of isomorphism classes of graphs on n labeled vertices, counted
// by canonicalizing every one of the 2^(n(n-1)/2) labeled graphs with
// min_adjacency_string (n <= 6).
long count_isomorphism_classes(int n);

// Gaussian elimination over exact rationals, no fraction-free tricks.
int rational_rank(const IntMatrix& m);

} // namespace gkit::brute

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gkit/bigint.hpp"
#include "gkit/graph.hpp"
#include "gkit/polynomial.hpp"

namespace gkit {

// Facet-list simplicial complex on vertex indices < ambient().
// Three shapes are distinguished:
//   - void complex: no faces at all (not even the empty face),
//   - irrelevant complex: only the empty face,
//   - anything with at least one vertex.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(int ambient = 0);
    static SimplicialComplex irrelevant(int ambient = 0);
    // Deduplicates and drops facets contained in other facets. An empty
    // facet list yields the void complex; a lone empty facet yields the
    // irrelevant complex.
    static SimplicialComplex from_facets(int ambient, std::vector<VertexSet> facets);

    bool is_void() const { return void_; }
    bool is_irrelevant() const { return !void_ && facets_.empty(); }
    int ambient() const { return ambient_; }

    // Facets sorted by bitset value; empty for the two degenerate shapes.
    const std::vector<VertexSet>& facets() const { return facets_; }

    VertexSet vertex_support() const;
    int dim() const; // -1 for the irrelevant complex; VoidComplex error otherwise degenerate
    bool contains_face(VertexSet f) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int ambient_ = 0;
    bool void_ = true;
    std::vector<VertexSet> facets_;
};

// f-vector with the empty face included: entries[0] = 1 counts the empty
// face and entries[i+1] counts i-dimensional faces; length dim+2.
struct FVector {
    std::vector<BigInt> entries;
    friend bool operator==(const FVector&, const FVector&) = default;
};

SimplicialComplex independence_complex(const Graph& g);

FVector f_vector(const SimplicialComplex& c);

// Faces grouped by dimension: element d+1 lists the d-dimensional faces
// (element 0 is the empty face), each group ordered lexicographically by
// vertex list.
std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& c);

// h-vector entries h_0..h_d (d = dim+1), trailing zeros kept.
std::vector<BigInt> h_vector(const SimplicialComplex& c);
IntPolynomial h_polynomial(const SimplicialComplex& c);

SimplicialComplex link(const SimplicialComplex& c, VertexSet f);
SimplicialComplex core(const SimplicialComplex& c);
bool is_pure(const SimplicialComplex& c);

// Pure and every face's link has reduced Euler characteristic (-1)^(dim of
// the link).
bool is_euler(const SimplicialComplex& c);

// One facet per line as space-separated vertex indices; the degenerate
// complexes are written as the single word "irrelevant" or "void".
SimplicialComplex parse_facet_file(std::string_view text);
std::string emit_facet_file(const SimplicialComplex& c);

} // namespace gkit

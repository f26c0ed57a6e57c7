#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gkit/bigint.hpp"
#include "gkit/graph.hpp"
#include "gkit/verdict.hpp"

namespace gkit {

// Decides whether g is Gorenstein over k. Isolated vertices are stripped
// first (each contributes a polynomial-ring factor); a remainder with
// independence number one must be a single edge; otherwise three
// conditions are checked, cheapest first:
//   (2) the independence polynomial evaluates to (-1)^alpha at -1,
//   (3) for every independent set F of size alpha-2 the complement of
//       G minus N[F] is a cycle of length at least four,
//   (1) the independence complex is Cohen-Macaulay over k (Reisner).
// Witnesses carry original vertex labels.
Verdict check_gorenstein_theorem(const Graph& g, const FieldSpec& k);

// alpha = 2 fast path: accepted iff the complement is a cycle of length at
// least four (field-independent).
Verdict check_alpha2(const Graph& g);

// Invariants every Gorenstein graph with alpha = 3 must satisfy: edge and
// independent-set counts as functions of n, plus the degree census.
struct Alpha3Report {
    int n = 0;
    long m = 0;
    BigInt a2, a3;
    long expected_m = 0;
    BigInt expected_a2, expected_a3;
    std::optional<std::vector<BigInt>> h;  // h-vector of the independence complex, when pure
    std::map<int, int> degree_census;      // degree -> vertex count
    bool all_match = false;                // m, a2, a3 all equal their expected values
};

Alpha3Report alpha3_invariants(const Graph& g);

// Runs the theorem-based checker against the homological oracle per field.
struct CrossValidation {
    struct Entry {
        FieldSpec field;
        Verdict theorem;
        Verdict homological;
        bool agree = false;
    };
    std::vector<Entry> entries;
    bool all_agree = true;
};

CrossValidation cross_validate(const Graph& g, const std::vector<FieldSpec>& fields);

} // namespace gkit

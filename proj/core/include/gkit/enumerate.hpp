#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkit/canonical.hpp"
#include "gkit/field.hpp"
#include "gkit/graph.hpp"

namespace gkit {

// Structural search over isomorphism classes. Hard caps at 12 vertices;
// growth-time pruning uses triangle-freeness, the alpha bound, the maximal
// allowed degree and edge budgets, all of which are preserved when vertices
// are deleted, so no class is lost.
struct SearchSpec {
    int n_min = 1;
    int n_max = 1;
    bool triangle_free = false;
    bool no_isolated = false;              // filtered at the target order
    std::optional<int> alpha;              // exact at the target order; alpha <= value while growing
    std::optional<bool> connected;         // filtered at the target order
    std::optional<long> edge_count;        // exact; requires n_min == n_max
    struct DegreeSpec {
        std::vector<int> allowed;          // every final degree must be listed here
        std::map<int, int> exact_multiplicity; // degree -> required vertex count
    };
    std::optional<DegreeSpec> degrees;     // requires n_min == n_max

    enum class Predicate { None, W2, Gorenstein };
    Predicate predicate = Predicate::None;
    std::optional<FieldSpec> predicate_field; // required for Gorenstein

    void validate() const; // throws InconsistentSpec
};

// Emits exactly one canonically labeled representative per isomorphism
// class satisfying the spec, smallest order first, deterministically.
// `jobs` > 1 splits each generation level across threads; the emitted
// sequence is identical for every job count.
void generate(const SearchSpec& spec, const std::function<void(const Graph&)>& sink, int jobs = 1);
std::vector<Graph> generate_all(const SearchSpec& spec, int jobs = 1);

struct ClassificationEntry {
    int n = 0;
    std::string graph6;
    CanonicalForm canonical;
    int alpha = 0;
    long m = 0;
    std::vector<std::pair<std::string, std::string>> properties;
};

struct ClassificationResult {
    std::vector<ClassificationEntry> entries; // sorted by (n, canonical form)
    std::map<int, long> count_per_n;          // entries per order, zero-filled over the sweep range
    double wall_ms = 0;
    std::vector<std::string> notes;
};

// The three triangle-free Gorenstein graphs with independence number 3:
// (a) three disjoint edges, (b) a 5-cycle plus a disjoint edge, (c) the
// 8-vertex graph with degree census 4x3 + 4x2.
std::vector<Graph> figure1_graphs();

// Two sweeps: an exhaustive one over 6..8 vertices (triangle-free, no
// isolated vertices, alpha=3, W2) whose winners are re-certified by the
// Gorenstein checker over q, f2 and f3, and a constrained one over 9..12
// vertices under the derived degree/edge-count restrictions, which must
// come back empty.
struct TrianglefreeAlpha3 {
    ClassificationResult exhaustive;  // n in [6,8]
    ClassificationResult constrained; // n in [9,12]
};
TrianglefreeAlpha3 classify_trianglefree_alpha3(int jobs = 1);

// Exhaustive alpha=2 sweep for 4 <= n <= max_n (max_n <= 10): which graphs
// without isolated vertices are accepted over both q and f2? Records
// whether the accepted set is exactly the cycle complements.
struct Alpha2Classification {
    ClassificationResult result;
    bool matches_cycle_complements = false;
};
Alpha2Classification verify_alpha2_classification(int max_n, int jobs = 1);

// Searches connected graphs with alpha=3, no isolated vertices and the
// mandatory edge count for Gorenstein candidates over the given field.
// Reports hits only; no completeness claim beyond max_n (<= 12).
ClassificationResult probe_connected_alpha3(int max_n, const FieldSpec& k, int jobs = 1);

} // namespace gkit

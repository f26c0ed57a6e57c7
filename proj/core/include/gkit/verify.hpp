#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gkit/field.hpp"

namespace gkit {

struct VerifyOptions {
    std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
    int corpus_size = 500;     // random graphs, 4..9 vertices, no isolated vertices
    int tf_corpus_size = 200;  // random triangle-free graphs
    unsigned seed = 20250808;  // corpora are deterministic
    int probe_max_n = 9;       // connected alpha=3 probe bound
    int jobs = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double ms = 0;
};

struct VerificationReport {
    std::vector<CriterionResult> criteria;
    bool all_passed() const;
};

// Runs the whole self-verification battery: the two classification sweeps,
// the counting identities, the necessity chain, route agreement, the W2
// equivalence, homology soundness and the brute-force oracle comparisons.
// Progress lines go to *progress when given.
VerificationReport run_verification(const VerifyOptions& opt = {}, std::ostream* progress = nullptr);

} // namespace gkit

// Acceptance suite: runs every verification criterion at full scale and
// prints one pass/fail line per criterion. Exits nonzero if any fails.
#include <cstdio>
#include <iostream>

#include "gkit/verify.hpp"

int main() {
    gkit::VerifyOptions opt;
    opt.fields = {gkit::FieldSpec::rationals(), gkit::FieldSpec::prime(2), gkit::FieldSpec::prime(3)};
    opt.corpus_size = 500;
    opt.tf_corpus_size = 200;
    opt.probe_max_n = 9;
    opt.jobs = 4;

    const gkit::VerificationReport report = gkit::run_verification(opt, &std::cerr);
    for (const auto& c : report.criteria) {
        std::printf("%s criterion %d: %s -- %s (%.0f ms)\n", c.passed ? "[PASS]" : "[FAIL]", c.id,
                    c.name.c_str(), c.detail.c_str(), c.ms);
    }
    if (!report.all_passed()) {
        std::printf("ACCEPTANCE: FAILED\n");
        return 1;
    }
    std::printf("ACCEPTANCE: all %zu criteria passed\n", report.criteria.size());
    return 0;
}

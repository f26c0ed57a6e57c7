#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkit/field.hpp"

namespace gkit {

// Structured evidence attached to a rejection: which condition failed, on
// which vertex/face set (original labels), and what was found.
struct Witness {
    std::string condition;
    std::vector<int> vertices;
    std::string detail;
};

enum class Route { Theorem, Homological, BaseCase };

std::string to_string(Route r);

struct Verdict {
    bool accepted = false;
    Route route = Route::Theorem;
    std::optional<FieldSpec> field;      // empty for field-independent verdicts
    std::optional<Witness> witness;      // present iff rejected
    std::vector<std::string> conditions_checked;
};

} // namespace gkit

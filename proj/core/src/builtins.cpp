#include "gkit/builtins.hpp"

#include <cctype>
#include <string>

#include "gkit/enumerate.hpp"

namespace gkit {

namespace {

std::optional<int> parse_count(std::string_view digits, int lo) {
    if (digits.empty()) return std::nullopt;
    for (char ch : digits)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    const long v = std::stol(std::string(digits));
    if (v < lo || v > Graph::kMaxVertices) return std::nullopt;
    return static_cast<int>(v);
}

} // namespace

std::optional<Graph> builtin_graph(std::string_view name) {
    if (name == "fig1a") return figure1_graphs()[0];
    if (name == "fig1b") return figure1_graphs()[1];
    if (name == "fig1c") return figure1_graphs()[2];
    if (name.substr(0, 4) == "cbar") {
        if (auto n = parse_count(name.substr(4), 3)) return cycle_complement(*n);
        return std::nullopt;
    }
    if (!name.empty()) {
        const char kind = name[0];
        const auto rest = name.substr(1);
        if (kind == 'c') {
            if (auto n = parse_count(rest, 3)) return cycle_graph(*n);
        } else if (kind == 'k') {
            if (auto n = parse_count(rest, 0)) return complete_graph(*n);
        } else if (kind == 'p') {
            if (auto n = parse_count(rest, 0)) return path_graph(*n);
        }
    }
    return std::nullopt;
}

} // namespace gkit

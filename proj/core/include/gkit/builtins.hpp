#pragma once

#include <optional>
#include <string_view>

#include "gkit/graph.hpp"

namespace gkit {

// Named graphs for hermetic tests and CLI input: fig1a, fig1b, fig1c,
// cbar<N> (cycle complement), c<N> (cycle), k<N> (complete), p<N> (path).
std::optional<Graph> builtin_graph(std::string_view name);

} // namespace gkit

#pragma once

#include <string>
#include <string_view>

#include "zc/graph.hpp"

namespace zc {

// Short-form graph6 only: 0 <= n <= 62.
inline constexpr std::size_t kGraph6MaxOrder = 62;

// Parses one graph6 record (no trailing newline). Throws Graph6Error on a
// malformed header, a character outside 63..126, a bit field of the wrong
// length, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

// Throws Graph6Error when g.order() > kGraph6MaxOrder.
std::string to_graph6(const Graph& g);

}  // namespace zc

#include "zc/graph6.hpp"

#include <string>
#include <vector>

#include "zc/error.hpp"

namespace zc {
namespace {

constexpr int kOffset = 63;

std::size_t bit_field_chars(std::size_t n) {
  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 record");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error("character code " + std::to_string(c) + " at offset " + std::to_string(i) +
                        " outside 63..126");
    }
  }
  if (text[0] == '~') throw Graph6Error("long-form graph6 header (n > 62) is not supported");

  const std::size_t n = static_cast<std::size_t>(text[0] - kOffset);
  const std::size_t expected = bit_field_chars(n);
  const std::size_t actual = text.size() - 1;
  if (actual != expected) {
    throw Graph6Error("bit field has " + std::to_string(actual) + " characters, expected " +
                      std::to_string(expected) + " for n=" + std::to_string(n));
  }

  std::vector<VertexSet> adj(n);
  std::size_t bit = 0;
  const std::size_t total = n * (n == 0 ? 0 : n - 1) / 2;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int chunk = text[1 + bit / 6] - kOffset;
      if ((chunk >> (5 - bit % 6)) & 1) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  if (total % 6 != 0) {
    const int last = text.back() - kOffset;
    const int pad_mask = (1 << (6 - total % 6)) - 1;
    if ((last & pad_mask) != 0) throw Graph6Error("nonzero padding bits in final character");
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Graph6Error("graph6 short form supports n <= 62, got n=" + std::to_string(n));
  }
  std::string out(1 + bit_field_chars(n), static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

}  // namespace zc

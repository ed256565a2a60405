#include "zc/structure.hpp"

#include <vector>

namespace zc {

BipartitionCertificate bipartition(const Graph& g) {
  BipartitionCertificate cert;
  cert.is_bipartite = true;
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    const Vertex root = unvisited.first();
    VertexSet frontier = VertexSet::single(root);
    bool side_a = true;
    while (!frontier.empty()) {
      (side_a ? cert.side_a : cert.side_b) |= frontier;
      unvisited -= frontier;
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      if (next.intersects(side_a ? cert.side_a : cert.side_b)) cert.is_bipartite = false;
      frontier = next & unvisited;
      side_a = !side_a;
    }
  }
  if (!cert.is_bipartite) {
    cert.side_a = {};
    cert.side_b = {};
  }
  return cert;
}

std::optional<BipartitionCertificate> balanced_bipartition(const Graph& g) {
  const BipartitionCertificate base = bipartition(g);
  if (!base.is_bipartite) return std::nullopt;
  const std::size_t n = g.order();
  if (n % 2 != 0) return std::nullopt;

  std::vector<VertexSet> comps;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    const VertexSet c = g.component_of(rest.first(), rest);
    comps.push_back(c);
    rest -= c;
  }

  // reach[i][s]: after the first i components, side A can hold exactly s vertices.
  // choice[i][s]: component i-1 was flipped to reach s.
  const std::size_t k = comps.size();
  std::vector<std::vector<char>> reach(k + 1, std::vector<char>(n + 1, 0));
  std::vector<std::vector<char>> flipped(k + 1, std::vector<char>(n + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t a = (comps[i] & base.side_a).size();
    const std::size_t b = (comps[i] & base.side_b).size();
    for (std::size_t s = 0; s <= n; ++s) {
      if (!reach[i][s]) continue;
      if (s + a <= n && !reach[i + 1][s + a]) reach[i + 1][s + a] = 1;
      if (s + b <= n && !reach[i + 1][s + b]) {
        reach[i + 1][s + b] = 1;
        flipped[i + 1][s + b] = 1;
      }
    }
  }
  if (!reach[k][n / 2]) return std::nullopt;

  BipartitionCertificate cert{.is_bipartite = true, .side_a = {}, .side_b = {}};
  std::size_t s = n / 2;
  for (std::size_t i = k; i > 0; --i) {
    const VertexSet a = comps[i - 1] & base.side_a;
    const VertexSet b = comps[i - 1] & base.side_b;
    if (flipped[i][s]) {
      cert.side_a |= b;
      cert.side_b |= a;
      s -= b.size();
    } else {
      cert.side_a |= a;
      cert.side_b |= b;
      s -= a.size();
    }
  }
  return cert;
}

bool is_regular(const Graph& g) {
  if (g.order() == 0) return true;
  const auto range = min_max_degree(g);
  return range.min == range.max;
}

bool is_regular_balanced_bipartite(const Graph& g) {
  if (g.order() == 0) return false;
  return is_regular(g) && balanced_bipartition(g).has_value();
}

}  // namespace zc

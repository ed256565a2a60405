#include "zc/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "zc/error.hpp"

namespace zc {

std::int64_t first_zagreb(const Graph& g) {
  std::int64_t sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    sum += d * d;
  }
  return sum;
}

std::int64_t forgotten_index(const Graph& g) {
  std::int64_t sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    sum += d * d * d;
  }
  return sum;
}

Rational inverse_degree(const Graph& g) {
  // Group by degree so the sum is count/d per distinct degree.
  std::vector<std::int64_t> count(g.order() + 1, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    if (d == 0) throw IsolatedVertexError("vertex " + std::to_string(v) + " is isolated");
    ++count[d];
  }
  Rational sum;
  for (std::size_t d = 1; d < count.size(); ++d) {
    if (count[d] != 0) sum += Rational(BigInt(count[d]), BigInt(d));
  }
  return sum;
}

DegreeRange min_max_degree(const Graph& g) {
  if (g.order() == 0) throw GraphError("minimum/maximum degree of the empty graph");
  const auto d = g.degrees();
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  return {*lo, *hi};
}

RadonChain radon_chain(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("radon_chain: length mismatch");
  if (a.empty()) throw std::invalid_argument("radon_chain: empty input");
  Rational cube_ratio_ab, cube_ratio_ba, dot, sq_a, sq_b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].sign() <= 0 || b[i].sign() <= 0) throw std::invalid_argument("radon_chain: nonpositive entry");
    cube_ratio_ab += a[i] * a[i] * a[i] / b[i];
    cube_ratio_ba += b[i] * b[i] * b[i] / a[i];
    dot += a[i] * b[i];
    sq_a += a[i] * a[i];
    sq_b += b[i] * b[i];
  }
  const Rational dot_sq = dot * dot;
  return RadonChain{
      .lhs = (cube_ratio_ab * cube_ratio_ba - dot_sq) / 2,
      .mid = sq_a * sq_b - dot_sq,
      .rhs = Rational(0),
  };
}

InvariantProfile profile(const Graph& g) {
  InvariantProfile p;
  p.n = g.order();
  p.e = g.edge_count();
  if (p.n > 0) {
    const auto range = min_max_degree(g);
    p.delta = range.min;
    p.Delta = range.max;
  }
  p.z1 = first_zagreb(g);
  p.f = forgotten_index(g);
  if (p.n > 0 && p.delta >= 1) p.inv = inverse_degree(g);
  return p;
}

}  // namespace zc

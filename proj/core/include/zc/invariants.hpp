#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "zc/graph.hpp"
#include "zc/rational.hpp"

namespace zc {

struct DegreeRange {
  std::size_t min = 0;
  std::size_t max = 0;
  bool operator==(const DegreeRange&) const = default;
};

// Degree-based quantities of one graph. `inv` is absent when the graph has an
// isolated vertex; `beta` and `kappa` are filled by fill_structure().
struct InvariantProfile {
  std::size_t n = 0;
  std::size_t e = 0;
  std::size_t delta = 0;
  std::size_t Delta = 0;
  std::int64_t z1 = 0;
  std::int64_t f = 0;
  std::optional<Rational> inv;
  std::optional<std::size_t> beta;
  std::optional<std::size_t> kappa;
};

// Sum of squared degrees.
std::int64_t first_zagreb(const Graph& g);
// Sum of cubed degrees.
std::int64_t forgotten_index(const Graph& g);
// Sum of reciprocal degrees; throws IsolatedVertexError if some degree is 0.
Rational inverse_degree(const Graph& g);
// Throws GraphError on the empty graph.
DegreeRange min_max_degree(const Graph& g);

// Terms of the Radon-type chain
//   lhs = 1/2 (sum a^3/b * sum b^3/a - (sum ab)^2)
//   mid = sum a^2 * sum b^2 - (sum ab)^2
//   rhs = 0
// for positive vectors a, b of equal length. The chain lhs >= mid >= rhs holds
// for every valid input; callers assert it.
struct RadonChain {
  Rational lhs;
  Rational mid;
  Rational rhs;
};
// Throws std::invalid_argument on a length mismatch, an empty input, or a
// nonpositive entry.
RadonChain radon_chain(std::span<const Rational> a, std::span<const Rational> b);

// Computes n, e, degrees and the three indices. Never throws for n >= 1;
// a graph with an isolated vertex simply gets no `inv`.
InvariantProfile profile(const Graph& g);

}  // namespace zc

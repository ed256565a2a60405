#include "zc/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <vector>

#include "zc/error.hpp"

namespace zc {
namespace {

constexpr std::size_t kDefaultOracleLimit = 24;
// Endpoint sets are stored as 32-bit words over 2^(n-1) or 2^n masks.
constexpr std::size_t kHardOracleLimit = 28;

void check_oracle_size(const Graph& g) {
  if (g.order() > oracle_vertex_limit()) {
    throw InstanceTooLargeError("Hamiltonian oracle limited to n <= " + std::to_string(oracle_vertex_limit()) +
                                ", got n=" + std::to_string(g.order()));
  }
}

std::vector<std::uint32_t> adjacency_words(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = static_cast<std::uint32_t>(g.neighbors(v).bits());
  return adj;
}

}  // namespace

std::size_t oracle_vertex_limit() {
  if (const char* env = std::getenv("ZC_MAX_ORACLE_N")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1) {
      return std::min<std::size_t>(static_cast<std::size_t>(value), kHardOracleLimit);
    }
  }
  return kDefaultOracleLimit;
}

bool has_hamiltonian_cycle(const Graph& g) {
  check_oracle_size(g);
  const std::size_t n = g.order();
  if (n < 3) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return false;
  }
  if (!g.is_connected()) return false;

  const auto adj = adjacency_words(g);
  // Paths start at vertex 0. Mask bit i stands for vertex i+1; ends[mask]
  // holds the (unshifted) vertices at which a path covering {0} + mask can end.
  const std::size_t masks = std::size_t{1} << (n - 1);
  std::vector<std::uint32_t> ends(masks, 0);
  for (Vertex v : g.neighbors(0)) ends[std::size_t{1} << (v - 1)] |= std::uint32_t{1} << v;
  const std::size_t full = masks - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::uint32_t here = ends[mask];
    if (here == 0) continue;
    for (std::size_t rest = full & ~mask; rest != 0; rest &= rest - 1) {
      const int bit = std::countr_zero(rest);
      const Vertex v = static_cast<Vertex>(bit) + 1;
      if ((adj[v] & here) != 0) ends[mask | (std::size_t{1} << bit)] |= std::uint32_t{1} << v;
    }
  }
  return (ends[full] & adj[0]) != 0;
}

bool has_hamiltonian_path(const Graph& g) {
  check_oracle_size(g);
  const std::size_t n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  std::size_t leaves = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d == 0) return false;
    if (d == 1) ++leaves;
  }
  if (leaves > 2 || !g.is_connected()) return false;

  const auto adj = adjacency_words(g);
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::uint32_t> ends(masks, 0);
  for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  const std::size_t full = masks - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::uint32_t here = ends[mask];
    if (here == 0) continue;
    for (std::size_t rest = full & ~mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((adj[static_cast<std::size_t>(v)] & here) != 0) ends[mask | (std::size_t{1} << v)] |= std::uint32_t{1} << v;
    }
  }
  return ends[full] != 0;
}

bool chvatal_erdos_hamiltonian(const Graph& g) {
  if (g.order() < 3) throw HypothesisError("Chvatal-Erdos Hamiltonian condition needs n >= 3");
  const std::size_t kappa = vertex_connectivity(g);
  return kappa >= 2 && independence_number(g).beta <= kappa;
}

bool chvatal_erdos_traceable(const Graph& g) {
  return independence_number(g).beta <= vertex_connectivity(g) + 1;
}

bool moon_moser_condition(const Graph& g) {
  const auto cert = balanced_bipartition(g);
  if (!cert || cert->side_a.empty()) throw NotBalancedBipartiteError("graph is not balanced bipartite");
  const std::size_t m = cert->side_a.size();
  for (Vertex x : cert->side_a) {
    const std::size_t dx = g.degree(x);
    for (Vertex y : cert->side_b - g.neighbors(x)) {
      if (dx + g.degree(y) < m + 1) return false;
    }
  }
  return true;
}

void fill_structure(InvariantProfile& profile, const Graph& g) {
  profile.beta = independence_number(g).beta;
  profile.kappa = vertex_connectivity(g);
}

}  // namespace zc

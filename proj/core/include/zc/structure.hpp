#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "zc/graph.hpp"
#include "zc/invariants.hpp"

namespace zc {

struct IndependenceCertificate {
  std::size_t beta = 0;
  VertexSet witness;
};

struct BipartitionCertificate {
  bool is_bipartite = false;
  VertexSet side_a;
  VertexSet side_b;
};

// Exact maximum independent set by branch and bound: branch on a vertex of
// maximum degree within the candidate set, prune with a greedy clique cover.
IndependenceCertificate independence_number(const Graph& g);

// Calls `visit` once for every independent set of size beta(g).
void for_each_maximum_independent_set(const Graph& g, const std::function<void(VertexSet)>& visit);

bool is_independent(const Graph& g, VertexSet s);

// kappa(G): n-1 for complete graphs (0 for K1 and the empty graph), 0 when
// disconnected, otherwise the minimum vertex separator size, via unit-capacity
// max-flow on the split-vertex digraph.
std::size_t vertex_connectivity(const Graph& g);

// Maximum number of internally vertex-disjoint s-t paths for nonadjacent s != t.
// Stops early once `cap` paths are found.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap);

// BFS two-colouring of every component; the lowest vertex of each component
// goes to side A.
BipartitionCertificate bipartition(const Graph& g);

// A bipartition with |A| = |B|, if one exists. Component sides are oriented by
// subset-sum over their imbalances.
std::optional<BipartitionCertificate> balanced_bipartition(const Graph& g);

bool is_regular(const Graph& g);

// Regular, bipartite, and admits a balanced bipartition.
bool is_regular_balanced_bipartite(const Graph& g);

// Largest order the exact Hamiltonian oracles accept: 24 unless overridden by
// the ZC_MAX_ORACLE_N environment variable (clamped to 30).
std::size_t oracle_vertex_limit();

// Exact Hamiltonian cycle / path decision by bitmask dynamic programming over
// endpoint sets. K1 and K2 have no Hamiltonian cycle; K1 and K2 are traceable.
// Throws InstanceTooLargeError above oracle_vertex_limit().
bool has_hamiltonian_cycle(const Graph& g);
bool has_hamiltonian_path(const Graph& g);

// beta <= kappa with kappa >= 2. Throws HypothesisError when n < 3.
bool chvatal_erdos_hamiltonian(const Graph& g);
// beta <= kappa + 1.
bool chvatal_erdos_traceable(const Graph& g);

// For a balanced bipartite graph with sides of size m: every nonadjacent cross
// pair (x, y) has d(x) + d(y) >= m + 1. Throws NotBalancedBipartiteError when
// no balanced bipartition exists or m = 0.
bool moon_moser_condition(const Graph& g);

// Edge-count terms for an independent set I.
struct EdgeCountChain {
  std::size_t inside_degree_sum = 0;   // sum of d(u), u in I
  std::size_t cross_edges = 0;         // |E(I, V - I)|
  std::size_t edges = 0;               // e
  std::size_t outside_degree_sum = 0;  // sum of d(v), v in V - I
  bool holds() const {
    return inside_degree_sum == cross_edges && cross_edges <= edges && edges <= outside_degree_sum;
  }
};
// Throws HypothesisError when `independent` is not an independent set of g.
EdgeCountChain edge_count_chain(const Graph& g, VertexSet independent);
bool proof_edge_inequality(const Graph& g, VertexSet independent);

// Fills profile.beta and profile.kappa.
void fill_structure(InvariantProfile& profile, const Graph& g);

}  // namespace zc

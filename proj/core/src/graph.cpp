#include "zc/graph.hpp"

#include <algorithm>
#include <string>

#include "zc/error.hpp"

namespace zc {
namespace {

void check_order(std::size_t n) {
  if (n > Graph::kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " exceeds limit " +
                     std::to_string(Graph::kMaxVertices));
  }
}

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  check_order(n);
  std::vector<VertexSet> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::size_t twice = 0;
  for (const auto& s : adj) twice += s.size();
  return Graph(std::move(adj), twice / 2);
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
  const std::size_t n = adjacency.size();
  check_order(n);
  const VertexSet all = VertexSet::range(n);
  std::size_t twice = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (!adjacency[u].is_subset_of(all)) throw GraphError("neighbor out of range at vertex " + std::to_string(u));
    if (adjacency[u].contains(u)) throw GraphError("self-loop at vertex " + std::to_string(u));
    for (Vertex v : adjacency[u]) {
      if (!adjacency[v].contains(u)) {
        throw GraphError("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
      }
    }
    twice += adjacency[u].size();
  }
  return Graph(std::move(adjacency), twice / 2);
}

VertexSet Graph::neighbors(Vertex v) const {
  if (v >= order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return adj_[v];
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order());
  std::transform(adj_.begin(), adj_.end(), d.begin(), [](VertexSet s) { return s.size(); });
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<Vertex> index(order(), 0);
  Vertex next = 0;
  for (Vertex v : keep) index[v] = next++;
  std::vector<VertexSet> adj(keep.size());
  std::size_t twice = 0;
  for (Vertex v : keep) {
    for (Vertex w : adj_[v] & keep) adj[index[v]].insert(index[w]);
    twice += adj[index[v]].size();
  }
  return Graph(std::move(adj), twice / 2);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw GraphError("permutation size mismatch");
  VertexSet seen;
  for (Vertex p : perm) {
    if (p >= order() || seen.contains(p)) throw GraphError("not a permutation");
    seen.insert(p);
  }
  std::vector<VertexSet> adj(order());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) adj[perm[u]].insert(perm[v]);
  }
  return Graph(std::move(adj), edges_);
}

Graph Graph::complement() const {
  const VertexSet all = vertices();
  std::vector<VertexSet> adj(order());
  for (Vertex u = 0; u < order(); ++u) adj[u] = all - adj_[u] - VertexSet::single(u);
  const std::size_t n = order();
  return Graph(std::move(adj), n * (n == 0 ? 0 : n - 1) / 2 - edges_);
}

VertexSet Graph::component_of(Vertex from, VertexSet within) const {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= adj_[v];
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::is_connected() const {
  if (order() <= 1) return true;
  return component_of(0, vertices()) == vertices();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const std::size_t shift = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edge_list(a.order() + b.order(), edges);
}

namespace named {

Graph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph::from_edge_list(n, e);
}

Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edge_list(n, e);
}

// Center is vertex 0.
Graph star(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edge_list(leaves + 1, e);
}

// Sides are 0..a-1 and a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edge_list(a + b, e);
}

Graph hypercube(std::size_t dim) {
  if (dim > 6) throw GraphError("hypercube dimension above 6 exceeds the vertex limit");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t b = 0; b < dim; ++b) {
      const Vertex v = u ^ (std::size_t{1} << b);
      if (u < v) e.emplace_back(u, v);
    }
  return Graph::from_edge_list(n, e);
}

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, e);
}

Graph empty(std::size_t n) { return Graph::from_edge_list(n, {}); }

}  // namespace named
}  // namespace zc

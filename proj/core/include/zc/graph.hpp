#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace zc {

using Vertex = std::size_t;

// Set of vertices drawn from 0..63, stored as a single machine word.
class VertexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Vertex v) const { return v < kCapacity && ((bits_ >> v) & 1U) != 0; }
  // Smallest member; undefined on an empty set.
  constexpr Vertex first() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  // Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Immutable simple undirected graph on vertices 0..n-1 (n <= 64), adjacency
// stored as one bitset per vertex.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = VertexSet::kCapacity;

  Graph() = default;

  // Duplicate pairs collapse; self-loops and out-of-range endpoints throw GraphError.
  static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }
  // Validates loop-freeness, symmetry and range; throws GraphError otherwise.
  static Graph from_adjacency(std::vector<VertexSet> adjacency);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(order()); }

  // Bounds-checked; throws GraphError when v >= order().
  VertexSet neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::vector<std::size_t> degrees() const;
  bool has_edge(Vertex u, Vertex v) const { return u < order() && adj_[u].contains(v); }

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Subgraph induced on `keep`, with vertices renumbered in increasing order.
  Graph induced(VertexSet keep) const;
  // Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph complement() const;
  // Vertices reachable from `from` (including it).
  VertexSet component_of(Vertex from, VertexSet within) const;
  bool is_connected() const;

  std::span<const VertexSet> adjacency() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> adj, std::size_t edges) : adj_(std::move(adj)), edges_(edges) {}

  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

namespace named {
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph hypercube(std::size_t dim);
Graph petersen();
Graph empty(std::size_t n);
}  // namespace named

}  // namespace zc

#include "zc/structure.hpp"

#include <array>
#include <bit>
#include <vector>

namespace zc {
namespace {

// Bitset over the 2n <= 128 nodes of the split digraph.
struct NodeSet {
  std::array<std::uint64_t, 2> w{};

  bool test(std::size_t i) const { return ((w[i >> 6] >> (i & 63)) & 1U) != 0; }
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  NodeSet minus(const NodeSet& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::uint64_t rest = w[k]; rest != 0; rest &= rest - 1) {
        f((k << 6) | static_cast<std::size_t>(std::countr_zero(rest)));
      }
    }
  }
};

// Node 2v is v_in, node 2v+1 is v_out. Arcs: v_in -> v_out and u_out -> v_in
// for every edge uv, all of capacity 1. With no antiparallel arcs the residual
// graph is a plain 0/1 adjacency that flips arcs along augmenting paths.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : residual_(2 * g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      residual_[2 * v].set(2 * v + 1);
      for (Vertex u : g.neighbors(v)) residual_[2 * u + 1].set(2 * v);
    }
  }

  std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t cap) {
    std::size_t flow = 0;
    std::vector<std::size_t> parent(residual_.size());
    std::vector<std::size_t> queue;
    queue.reserve(residual_.size());
    while (flow < cap) {
      NodeSet seen;
      seen.set(source);
      queue.assign(1, source);
      bool reached = false;
      for (std::size_t head = 0; head < queue.size() && !reached; ++head) {
        const std::size_t x = queue[head];
        residual_[x].minus(seen).for_each([&](std::size_t y) {
          if (reached) return;
          seen.set(y);
          parent[y] = x;
          queue.push_back(y);
          if (y == sink) reached = true;
        });
      }
      if (!reached) break;
      for (std::size_t y = sink; y != source; y = parent[y]) {
        const std::size_t x = parent[y];
        residual_[x].reset(y);
        residual_[y].set(x);
      }
      ++flow;
    }
    return flow;
  }

 private:
  std::vector<NodeSet> residual_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  SplitFlow flow(g);
  return flow.max_flow(2 * s + 1, 2 * t, cap);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  if (!g.is_connected()) return 0;

  const auto degrees = g.degrees();
  Vertex s = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (degrees[v] < degrees[s]) s = v;
  }
  // N(s) separates s from any non-neighbour, so kappa <= delta.
  std::size_t best = degrees[s];
  const VertexSet all = g.vertices();
  for (Vertex t : all - g.neighbors(s) - VertexSet::single(s)) {
    best = std::min(best, local_vertex_connectivity(g, s, t, best));
  }
  // If s lies in every minimum separator, two of its neighbours sit on
  // opposite sides of one; both are nonadjacent, so scanning the
  // non-neighbours of each neighbour of s covers that pair.
  for (Vertex x : g.neighbors(s)) {
    for (Vertex t : all - g.neighbors(x) - VertexSet::single(x)) {
      best = std::min(best, local_vertex_connectivity(g, x, t, best));
    }
  }
  return best;
}

}  // namespace zc

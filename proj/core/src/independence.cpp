#include "zc/structure.hpp"

#include <span>

#include "zc/error.hpp"

namespace zc {
namespace {

// Number of cliques in a greedy cover of `cand`; an upper bound on the
// independence number of the subgraph induced by `cand`.
std::size_t clique_cover_bound(std::span<const VertexSet> adj, VertexSet cand) {
  std::size_t cliques = 0;
  while (!cand.empty()) {
    const Vertex v = cand.first();
    cand.erase(v);
    VertexSet extend = adj[v] & cand;
    while (!extend.empty()) {
      const Vertex w = extend.first();
      cand.erase(w);
      extend &= adj[w];
    }
    ++cliques;
  }
  return cliques;
}

class MaxIndependentSetSearch {
 public:
  explicit MaxIndependentSetSearch(std::span<const VertexSet> adj) : adj_(adj) {}

  IndependenceCertificate run(VertexSet all) {
    search(VertexSet{}, all);
    return {best_.size(), best_};
  }

 private:
  void search(VertexSet chosen, VertexSet cand) {
    // Vertices with at most one neighbour among the candidates belong to some
    // maximum independent set of the candidate subgraph.
    for (bool reduced = true; reduced;) {
      reduced = false;
      for (Vertex v : cand) {
        if (!cand.contains(v)) continue;
        const VertexSet nb = adj_[v] & cand;
        if (nb.size() <= 1) {
          chosen.insert(v);
          cand -= nb;
          cand.erase(v);
          reduced = true;
        }
      }
    }
    if (cand.empty()) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + clique_cover_bound(adj_, cand) <= best_.size()) return;

    Vertex pivot = cand.first();
    std::size_t pivot_degree = 0;
    for (Vertex v : cand) {
      const std::size_t d = (adj_[v] & cand).size();
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    VertexSet with = cand - adj_[pivot];
    with.erase(pivot);
    VertexSet chosen_with = chosen;
    chosen_with.insert(pivot);
    search(chosen_with, with);
    VertexSet without = cand;
    without.erase(pivot);
    search(chosen, without);
  }

  std::span<const VertexSet> adj_;
  VertexSet best_;
};

void enumerate_maximum(std::span<const VertexSet> adj, std::size_t beta, VertexSet chosen, VertexSet cand,
                       const std::function<void(VertexSet)>& visit) {
  if (cand.empty()) {
    if (chosen.size() == beta) visit(chosen);
    return;
  }
  if (chosen.size() + clique_cover_bound(adj, cand) < beta) return;
  const Vertex v = cand.first();
  VertexSet rest = cand;
  rest.erase(v);
  VertexSet chosen_with = chosen;
  chosen_with.insert(v);
  enumerate_maximum(adj, beta, chosen_with, rest - adj[v], visit);
  enumerate_maximum(adj, beta, chosen, rest, visit);
}

}  // namespace

bool is_independent(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) return false;
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

IndependenceCertificate independence_number(const Graph& g) {
  if (g.order() == 0) return {};
  return MaxIndependentSetSearch(g.adjacency()).run(g.vertices());
}

void for_each_maximum_independent_set(const Graph& g, const std::function<void(VertexSet)>& visit) {
  if (g.order() == 0) {
    visit(VertexSet{});
    return;
  }
  const std::size_t beta = independence_number(g).beta;
  enumerate_maximum(g.adjacency(), beta, VertexSet{}, g.vertices(), visit);
}

EdgeCountChain edge_count_chain(const Graph& g, VertexSet independent) {
  if (!is_independent(g, independent)) throw HypothesisError("vertex set is not independent");
  EdgeCountChain chain;
  chain.edges = g.edge_count();
  const VertexSet outside = g.vertices() - independent;
  for (Vertex u : independent) {
    chain.inside_degree_sum += g.degree(u);
    chain.cross_edges += (g.neighbors(u) & outside).size();
  }
  for (Vertex v : outside) chain.outside_degree_sum += g.degree(v);
  return chain;
}

bool proof_edge_inequality(const Graph& g, VertexSet independent) {
  return edge_count_chain(g, independent).holds();
}

}  // namespace zc

#include <iostream>
#include <string_view>

#include "zc/error.hpp"
#include "zc/graph6.hpp"
#include "zc/harness.hpp"

namespace zc {

LabeledGraphEnumerator::LabeledGraphEnumerator(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxOrder) {
    throw Error("labeled enumeration supports 1 <= n <= " + std::to_string(kMaxOrder) + ", got " + std::to_string(n) +
                "; use a graph6 corpus for larger orders");
  }
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs_.emplace_back(i, j);
  total_ = std::uint64_t{1} << pairs_.size();
}

std::optional<SourceItem> LabeledGraphEnumerator::next() {
  if (mask_ >= total_) return std::nullopt;
  std::vector<VertexSet> adj(n_);
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    const auto [u, v] = pairs_[static_cast<std::size_t>(std::countr_zero(rest))];
    adj[u].insert(v);
    adj[v].insert(u);
  }
  SourceItem item{Graph::from_adjacency(std::move(adj)), static_cast<std::size_t>(mask_)};
  ++mask_;
  return item;
}

std::string LabeledGraphEnumerator::description() const {
  return "labeled graphs n=" + std::to_string(n_);
}

std::unique_ptr<LabeledGraphEnumerator> enumerate_labeled_graphs(std::size_t n) {
  return std::make_unique<LabeledGraphEnumerator>(n);
}

ChainedSource::ChainedSource(std::vector<std::unique_ptr<GraphSource>> parts, std::string description)
    : parts_(std::move(parts)), description_(std::move(description)) {}

std::optional<SourceItem> ChainedSource::next() {
  while (current_ < parts_.size()) {
    if (auto item = parts_[current_]->next()) {
      item->position = emitted_++;
      return item;
    }
    ++current_;
  }
  return std::nullopt;
}

std::unique_ptr<GraphSource> enumerate_labeled_graphs_up_to(std::size_t max_order) {
  std::vector<std::unique_ptr<GraphSource>> parts;
  for (std::size_t n = 1; n <= max_order; ++n) parts.push_back(enumerate_labeled_graphs(n));
  if (parts.empty()) throw Error("labeled enumeration needs max order >= 1");
  return std::make_unique<ChainedSource>(std::move(parts), "labeled graphs n<=" + std::to_string(max_order));
}

VectorSource::VectorSource(std::vector<Graph> graphs, std::string description)
    : graphs_(std::move(graphs)), description_(std::move(description)) {}

std::optional<SourceItem> VectorSource::next() {
  if (index_ >= graphs_.size()) return std::nullopt;
  SourceItem item{graphs_[index_], index_};
  ++index_;
  return item;
}

Graph6StreamSource::Graph6StreamSource(std::istream& in, std::string description, bool fail_fast)
    : in_(&in), description_(std::move(description)), fail_fast_(fail_fast) {}

std::optional<SourceItem> Graph6StreamSource::next() {
  static constexpr std::string_view kHeader = ">>graph6<<";
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view record = line;
    if (record.starts_with(kHeader)) record.remove_prefix(kHeader.size());
    if (record.empty()) continue;
    try {
      return SourceItem{parse_graph6(record), line_};
    } catch (const Graph6Error& e) {
      const std::string message = description_ + ":" + std::to_string(line_) + ": " + e.what();
      if (fail_fast_) throw Graph6Error(message);
      std::cerr << "warning: skipping " << message << '\n';
      issues_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

Graph6FileSource::Graph6FileSource(const std::string& path, bool fail_fast) {
  if (path == "-") {
    inner_ = std::make_unique<Graph6StreamSource>(std::cin, "<stdin>", fail_fast);
    return;
  }
  file_.open(path);
  if (!file_) throw Error("cannot open graph6 file '" + path + "'");
  inner_ = std::make_unique<Graph6StreamSource>(file_, path, fail_fast);
}

std::unique_ptr<Graph6FileSource> scan_graph6(const std::string& path, bool fail_fast) {
  return std::make_unique<Graph6FileSource>(path, fail_fast);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng, bool connected) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i)
        if (coin(rng)) edges.emplace_back(i, j);
    Graph g = Graph::from_edge_list(n, edges);
    if (!connected || g.is_connected()) return g;
  }
}

}  // namespace zc

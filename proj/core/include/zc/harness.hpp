#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zc/graph.hpp"

namespace zc {

struct SourceItem {
  Graph graph;
  // 1-based line number for graph6 input, running index for enumerations.
  std::size_t position = 0;
};

// Pull-based stream of graphs. Not thread-safe; campaigns serialise access.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  virtual std::optional<SourceItem> next() = 0;
  virtual std::string description() const = 0;
};

// Every labeled simple graph on n vertices (1 <= n <= 7), in edge-mask order:
// bit i of the mask selects the i-th pair of the graph6 upper-triangle order.
class LabeledGraphEnumerator final : public GraphSource {
 public:
  static constexpr std::size_t kMaxOrder = 7;
  // Throws zc::Error when n is 0 or above kMaxOrder.
  explicit LabeledGraphEnumerator(std::size_t n);

  std::optional<SourceItem> next() override;
  std::string description() const override;
  std::uint64_t total() const { return total_; }

 private:
  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::uint64_t total_;
  std::uint64_t mask_ = 0;
};

std::unique_ptr<LabeledGraphEnumerator> enumerate_labeled_graphs(std::size_t n);

// Concatenates sources in order.
class ChainedSource final : public GraphSource {
 public:
  explicit ChainedSource(std::vector<std::unique_ptr<GraphSource>> parts, std::string description);
  std::optional<SourceItem> next() override;
  std::string description() const override { return description_; }

 private:
  std::vector<std::unique_ptr<GraphSource>> parts_;
  std::size_t current_ = 0;
  std::size_t emitted_ = 0;
  std::string description_;
};

// Labeled graphs of every order 1..max_order.
std::unique_ptr<GraphSource> enumerate_labeled_graphs_up_to(std::size_t max_order);

class VectorSource final : public GraphSource {
 public:
  VectorSource(std::vector<Graph> graphs, std::string description);
  std::optional<SourceItem> next() override;
  std::string description() const override { return description_; }

 private:
  std::vector<Graph> graphs_;
  std::size_t index_ = 0;
  std::string description_;
};

struct ParseIssue {
  std::size_t line = 0;
  std::string message;
};

// One graph6 record per line. Blank lines are skipped and a leading
// ">>graph6<<" header (alone or prefixed to the first record) is stripped.
// With fail_fast a malformed line throws Graph6Error naming the line;
// otherwise it is logged to issues() and skipped.
class Graph6StreamSource final : public GraphSource {
 public:
  Graph6StreamSource(std::istream& in, std::string description, bool fail_fast = true);
  std::optional<SourceItem> next() override;
  std::string description() const override { return description_; }
  const std::vector<ParseIssue>& issues() const { return issues_; }

 private:
  std::istream* in_;
  std::string description_;
  bool fail_fast_;
  std::size_t line_ = 0;
  std::vector<ParseIssue> issues_;
};

// Owns the file stream; "-" reads standard input. Throws zc::Error when the
// file cannot be opened.
class Graph6FileSource final : public GraphSource {
 public:
  explicit Graph6FileSource(const std::string& path, bool fail_fast = true);
  std::optional<SourceItem> next() override { return inner_->next(); }
  std::string description() const override { return inner_->description(); }
  const std::vector<ParseIssue>& issues() const { return inner_->issues(); }

 private:
  std::ifstream file_;
  std::unique_ptr<Graph6StreamSource> inner_;
};

std::unique_ptr<Graph6FileSource> scan_graph6(const std::string& path, bool fail_fast = true);

struct Violation {
  std::string graph6;
  std::string check;
  std::string detail;
  auto operator<=>(const Violation&) const = default;
};

struct CampaignResult {
  std::string corpus_description;
  std::size_t graphs_scanned = 0;
  std::vector<Violation> violations;        // sorted
  std::vector<std::string> equality_witnesses;  // sorted
  // Named tallies such as skipped graphs and conditions that held.
  std::map<std::string, std::size_t> counters;
  std::chrono::duration<double> elapsed{0};

  bool certified() const { return violations.empty(); }
};

struct CampaignOptions {
  std::size_t jobs = 1;
  std::size_t batch_size = 2048;
};

// Per graph with delta >= 1: no bound may be violated, and "every part is an
// equality" must coincide with being regular balanced bipartite. Graphs with
// an isolated vertex are counted under "skipped_isolated_vertex".
CampaignResult run_theorem1_campaign(GraphSource& source, const CampaignOptions& options = {});

// Per graph meeting the order and connectivity filter (id 2: n >= 3,
// kappa >= 2; id 3: n >= 9, kappa >= 1), every admissible k up to kappa
// and every part: a condition that holds must be confirmed by the exact
// Hamiltonian cycle (id 2) or path (id 3) oracle.
CampaignResult run_theorem23_campaign(GraphSource& source, int theorem, const CampaignOptions& options = {});

enum class ReportFormat { JsonLines, Csv };

struct ReportOptions {
  // Off for byte-for-byte comparison of two runs.
  bool include_elapsed = true;
};

// JSON-lines: one record per violation, then per equality witness, then a
// summary record. CSV: header plus one row per violation and witness; the
// summary is dropped.
std::string emit_report(const CampaignResult& result, ReportFormat format, const ReportOptions& options = {});

// G(n, p) sample; with `connected` set, redraws until the sample is connected.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng, bool connected = false);

}  // namespace zc
